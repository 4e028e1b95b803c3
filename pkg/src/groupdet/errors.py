"""Exception types shared across the package."""


class GroupDetError(Exception):
    """Base class for structured errors raised by this package."""


class NotAGroup(GroupDetError):
    """A Cayley table violates a group axiom; the message names the failure."""


class UnknownCatalogKey(GroupDetError):
    """The requested builtin group key is not in the catalog."""


class NotAbelian(GroupDetError):
    """An operation requiring an abelian (sub)group got a nonabelian one."""


class NotNormal(GroupDetError):
    """An operation requiring a normal subgroup got a non-normal one."""


class QuotientNotAbelian(GroupDetError):
    """The commutant machinery needs an abelian quotient."""


class NotASubgroupChain(GroupDetError):
    """Composition of regular representations needs nested subgroups."""


class GroupMismatch(GroupDetError):
    """Two algebra values belong to different groups."""


class SizeMismatch(GroupDetError):
    """Matrix dimensions are incompatible."""


class NotSupportedOnSubgroup(GroupDetError):
    """An element has coefficients outside the required subgroup."""


class InvalidTransversal(GroupDetError):
    """Coset representatives do not tile the ambient set exactly."""


class ZeroPolynomial(GroupDetError):
    """The zero polynomial has no total degree."""


class OrderCapExceeded(GroupDetError):
    """A brute-force routine was asked to exceed its configured size cap."""


class SingularElement(GroupDetError):
    """Inversion was requested for a non-invertible element."""


class SingularMatrix(GroupDetError):
    """Inversion was requested for a non-invertible matrix."""


class SymbolicCoefficientsUnsupported(GroupDetError):
    """A numeric-only routine received symbolic coefficients."""


class FixtureMissing(GroupDetError):
    """Irreducible-degree data is not available for this group."""


class StrategyDisagreement(GroupDetError):
    """Cross-checked determinant strategies produced different results."""
