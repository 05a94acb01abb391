"""relcorr Logging Setup

Installs a rich log handler on stderr. Stdout stays reserved for data output.
"""

import logging

from rich.console import Console
from rich.logging import RichHandler


_HANDLER_NAME = "relcorr-rich"


def configure_logging(verbose: bool = False) -> None:
    """Route the root logger through rich on stderr.

    Calling it twice replaces the previous handler instead of stacking one.
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        if handler.get_name() == _HANDLER_NAME:
            root.removeHandler(handler)

    handler = RichHandler(
        console=Console(stderr=True),
        show_time=False,
        show_path=verbose,
        markup=False,
    )
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))

    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
