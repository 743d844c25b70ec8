from ._core import (
    InternalError,
    PreconditionError,
    __version__,
    check_law,
    check_proposition,
    decompose,
    expand,
    identity_ids,
    run_cli,
    transformation_laws,
    verify,
)

__all__ = [
    "InternalError",
    "PreconditionError",
    "__version__",
    "check_law",
    "check_proposition",
    "decompose",
    "expand",
    "identity_ids",
    "run_cli",
    "transformation_laws",
    "verify",
]
