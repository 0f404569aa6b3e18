class SuperUnitaryException(Exception):
    """Base exception for superunitary errors."""


class SignatureException(SuperUnitaryException):
    """Raised when an algebra descriptor or its real form is unusable."""


class InvalidSignatureException(SignatureException):
    """Raised when (m, n, p, q) does not describe a supported sl(m|n) real form."""


class InvalidKindException(SignatureException):
    """Raised when a positive system kind is not available for a signature."""


class WrongSystemException(SignatureException):
    """Raised when a positive system does not match the compact or non-compact case."""


class WrongCaseException(SignatureException):
    """Raised when a classifier is called for the other real-form case."""


class VariantMismatchException(SignatureException):
    """Raised when an anti-involution variant does not fit the signature."""


class RootException(SuperUnitaryException):
    """Raised when a root or coordinate tuple does not meet an operation's requirements."""


class LengthMismatchException(RootException):
    """Raised when coordinate tuples do not have length m+n."""


class NotEvenException(RootException):
    """Raised when an even root is required."""


class NotSimpleException(RootException):
    """Raised when a root is not simple in the current positive system."""


class NotOddIsotropicException(RootException):
    """Raised when an odd isotropic root is required."""


class NotOddPositiveException(RootException):
    """Raised when an odd positive root is required."""


class WeightException(SuperUnitaryException):
    """Raised when a weight or weight family is unusable."""


class InvalidFamilyException(WeightException):
    """Raised when family parameters violate their ordering constraints."""


class NonSymmetricWeightException(WeightException):
    """Raised when a weight is not symmetric for the chosen anti-involution."""


class NotSymmetricException(WeightException):
    """Raised when a Gram matrix is not symmetric."""


class PslConstraintViolatedException(WeightException):
    """Raised when a psl(n|n) weight violates the supertrace condition."""
