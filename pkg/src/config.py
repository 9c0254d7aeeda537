import logging
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Application configuration settings."""

    # Coefficients and bounds
    DEFAULT_FIELD = os.getenv("COSPAN_FIELD", "Q")
    DEFAULT_LAMBDA = os.getenv("COSPAN_LAMBDA", "2")

    # Flow homeomorphism: arctan, rational, table (knots u:t,u:t,...)
    DEFAULT_PHI = os.getenv("COSPAN_PHI", "arctan")
    PHI_KNOTS = os.getenv("COSPAN_PHI_KNOTS", "0:0")

    # Logging settings
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()
    LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # Oracle sampling
    VERIFY_WORKERS = int(os.getenv("VERIFY_WORKERS", "1"))
    VERIFY_SEED = int(os.getenv("VERIFY_SEED", "0"))
    VERIFY_PAIRS = int(os.getenv("VERIFY_PAIRS", "200"))
    VERIFY_RECTANGLES = int(os.getenv("VERIFY_RECTANGLES", "30"))
    VERIFY_BOUNDARY_SAMPLES = int(os.getenv("VERIFY_BOUNDARY_SAMPLES", "20"))

    # Distances
    DISTANCE_DIGITS = int(os.getenv("DISTANCE_DIGITS", "12"))
    METRIC_TOLERANCE = float(os.getenv("METRIC_TOLERANCE", "1e-9"))
    BISECTION_STEPS = int(os.getenv("BISECTION_STEPS", "200"))

    # Runtime assertions on constructed bases
    ASSERT_ORTHOGONAL = os.getenv("ASSERT_ORTHOGONAL", "true").lower() == "true"

    PHI_KINDS = ("arctan", "rational", "table")

    _logging_configured = False

    @classmethod
    def configure_logging(cls) -> None:
        """Apply LOG_LEVEL to the root logger once per process."""
        if cls._logging_configured:
            return
        logging.basicConfig(level=cls.LOG_LEVEL, format=cls.LOG_FORMAT)
        cls._logging_configured = True

    @classmethod
    def validate(cls) -> bool:
        """Validate that configuration values are usable."""
        logger = logging.getLogger(__name__)
        ok = True
        if cls.DEFAULT_PHI not in cls.PHI_KINDS:
            logger.error("COSPAN_PHI must be one of %s, got %r", cls.PHI_KINDS, cls.DEFAULT_PHI)
            ok = False
        if cls.VERIFY_WORKERS < 1:
            logger.error("VERIFY_WORKERS must be at least 1")
            ok = False
        if cls.DISTANCE_DIGITS < 1:
            logger.error("DISTANCE_DIGITS must be positive")
            ok = False
        if cls.LOG_LEVEL not in logging.getLevelNamesMapping():
            logger.error("Unknown LOG_LEVEL %r", cls.LOG_LEVEL)
            ok = False
        return ok
