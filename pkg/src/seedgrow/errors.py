"""Exception hierarchy for the seedgrow package."""


class SeedGrowError(Exception):
    """Base class for all errors raised by this package."""


# --- tensor codec ---

class BadMagic(SeedGrowError):
    """Byte stream does not start with the tensor file magic."""


class UnsupportedRank(SeedGrowError):
    """Tensor header declares a rank other than 2 or 3."""


class TruncatedPayload(SeedGrowError):
    """Byte count does not match the header (short or trailing bytes)."""


class NonFiniteValue(SeedGrowError):
    """A tensor contains NaN or Inf."""


# --- geometry / indexing ---

class DimensionMismatch(SeedGrowError):
    """Two inputs that must share dimensions do not."""


class ChannelMismatch(SeedGrowError):
    """Feature channels and weight channels disagree."""


class IndexOutOfRange(SeedGrowError):
    """Class index outside the weight matrix."""


class OutOfBounds(SeedGrowError):
    """Pixel coordinates outside the image."""


# --- labels / seeds ---

class InvalidLabelCode(SeedGrowError):
    """Label code outside {0..C} plus the ignore code 255."""


class MissingCam(SeedGrowError):
    """A present class has no activation map."""


# --- manifest ---

class MalformedLine(SeedGrowError):
    """A manifest line does not match the expected record format."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class DuplicateId(SeedGrowError):
    """Two manifest entries share an image id."""


class EmptyManifest(SeedGrowError):
    """Manifest contains no entries."""


# --- evaluation ---

class EmptyEvaluation(SeedGrowError):
    """No class has a nonempty prediction/ground-truth union."""


class MissingName(SeedGrowError):
    """A reported class has no display name."""
