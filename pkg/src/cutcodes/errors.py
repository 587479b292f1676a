"""Exception and warning types shared across the package."""


class CutcodesError(Exception):
    """Base class for all package-specific errors."""


class NonPrimeCharacteristic(CutcodesError, ValueError):
    """Requested characteristic is not prime, or the order is not a prime power."""


class ReducibleModulus(CutcodesError, ValueError):
    """Supplied modulus polynomial is not irreducible, not monic, or has wrong degree."""


class UnsupportedOrder(CutcodesError, ValueError):
    """No built-in modulus for this prime power; caller must supply one."""


class ZeroInverse(CutcodesError, ZeroDivisionError):
    """Multiplicative inverse or negative power of zero."""


class ZeroNormal(CutcodesError, ValueError):
    """Hyperplane normal must be nonzero."""


class DimensionOutOfRange(CutcodesError, ValueError):
    """Subspace dimension outside 0..n."""


class OriginInSet(CutcodesError, ValueError):
    """Vectorial blocking-set checks require the origin to be excluded."""


class NonCanonicalPoint(CutcodesError, ValueError):
    """Projective checks require canonical representatives (first nonzero coordinate 1)."""


class SameHyperplane(CutcodesError, ValueError):
    """The two normals define the same hyperplane; the pairwise test needs distinct ones."""


class NotScalarCompatible(CutcodesError, ValueError):
    """Projective construction needs f(lambda*x) determined by f(x) up to scalars."""


class BudgetExceeded(CutcodesError, RuntimeError):
    """Estimated work exceeds the configured budget; raise instead of guessing."""


class ParseError(CutcodesError, ValueError):
    """Malformed input file (point set, function table, polynomial, or matrix)."""


class DegenerateDimensionWarning(UserWarning):
    """Constructed code has dimension below n+1 (linear f or huge zero set)."""


class EvenOrderWarning(UserWarning):
    """Staircase cutting guarantee is only established for odd field order."""
