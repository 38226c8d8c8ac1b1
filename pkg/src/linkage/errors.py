"""Exception hierarchy shared by every layer of the package."""


class LinkageError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LinkageError, ValueError):
    """Malformed text input: polynomials, ring/module/instance files."""


class HomogeneityError(LinkageError, ValueError):
    """A matrix entry does not have the degree forced by the twists."""


class RingMismatchError(LinkageError, ValueError):
    pass


class ZeroModuleError(LinkageError, ValueError):
    """An invariant that is undefined on the zero module was requested."""


class PreconditionError(LinkageError, ValueError):
    """An operation was called outside its domain (e.g. a non-annihilating ideal)."""


class ResourceCapError(LinkageError, RuntimeError):
    """A Groebner computation exceeded the configured degree cap."""
