"""Exception types raised across the package."""


class BellMixError(Exception):
    """Base class for all errors raised by bellmix."""


class NotHermitian(BellMixError, ValueError):
    def __init__(self, deviation):
        self.deviation = float(deviation)
        super().__init__(f"matrix is not Hermitian (max |H - H^dag| = {self.deviation:.3e})")


class NoConvergence(BellMixError, RuntimeError):
    pass


class NotPSD(BellMixError, ValueError):
    def __init__(self, min_eigenvalue):
        self.min_eigenvalue = float(min_eigenvalue)
        super().__init__(
            f"matrix is not positive semidefinite (most negative eigenvalue {self.min_eigenvalue:.3e})"
        )


class TraceNotOne(BellMixError, ValueError):
    def __init__(self, deviation):
        self.deviation = float(deviation)
        super().__init__(f"trace differs from 1 by {self.deviation:.3e}")


class PositivityViolation(BellMixError, ValueError):
    pass


class OutOfRange(BellMixError, ValueError):
    pass


class DegenerateEllipse(BellMixError, ValueError):
    pass


class PhiOutsideAdmissible(BellMixError, ValueError):
    pass


class NotLambda2(BellMixError, ValueError):
    def __init__(self, region):
        self.region = region
        super().__init__(f"point lies in {region}, not in Lambda2")


class NotUnit(BellMixError, ValueError):
    pass
