"""Exception hierarchy shared across the toolkit."""


class GazekitError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(GazekitError):
    """Invalid configuration value or missing required setting."""


class InvalidVectorError(GazekitError):
    """Input vector is not unit length within tolerance."""


class OutOfFrameError(GazekitError):
    """Projected geometry does not fit on the canvas."""


class ImageFormatError(GazekitError):
    """Malformed or unsupported raster file."""


class DatasetError(GazekitError):
    """Record violates dataset invariants."""


class DatasetFormatError(GazekitError):
    """Dataset file has a bad header or version."""


class TransportError(GazekitError):
    """HTTP request failed after exhausting retries."""


class ProtocolError(GazekitError):
    """Server reply does not conform to the chat-completion wire format."""


class MalformedReplyError(GazekitError):
    """Reply content could not be split into the requested descriptions."""


class BatchError(GazekitError):
    """Every sample in an annotation batch failed."""


class UnparseableTextError(GazekitError):
    """Description contains no recognizable direction keywords."""


class DivergedError(GazekitError):
    """Training produced a non-finite loss."""


class CheckpointError(GazekitError):
    """Checkpoint file is inconsistent with its manifest."""
