"""Row-level validation for the airfoil data file."""

from typing import List, Sequence

from pydantic import ValidationError

from src.data.models import COLUMN_NAMES, DOCUMENTED_RANGES, RangeFinding, Sample
from src.utils.errors import DataError
from src.utils.logger import get_logger
from src.utils.validators import in_range

logger = get_logger(__name__)


class DataValidator:
    """Validator for airfoil rows: hard physical checks plus documented ranges."""

    def __init__(self, strict_ranges: bool = True):
        self.strict_ranges = strict_ranges

    @staticmethod
    def parse_row(line: str, line_no: int) -> List[float]:
        """
        Split a whitespace/tab separated line into six floats.

        Args:
            line: Raw text line
            line_no: 1-based line number used in error messages

        Returns:
            Six values in dataset column order
        """
        tokens = line.split()
        if len(tokens) != len(COLUMN_NAMES):
            raise DataError(f"expected {len(COLUMN_NAMES)} fields, found {len(tokens)}", line=line_no)
        try:
            return [float(token) for token in tokens]
        except ValueError:
            bad = next(t for t in tokens if not _is_float(t))
            raise DataError(f"non-numeric token {bad!r}", line=line_no) from None

    @staticmethod
    def check_physical(values: Sequence[float], line_no: int) -> Sample:
        """Reject non-finite or physically implausible rows."""
        try:
            return Sample.from_row(values)
        except ValidationError as e:
            first = e.errors()[0]
            field_name = first['loc'][0] if first.get('loc') else 'row'
            raise DataError(f"invalid {field_name}: {first['msg']}", line=line_no) from None

    def check_ranges(self, values: Sequence[float], line_no: int) -> List[RangeFinding]:
        """
        Compare a row against the documented value ranges.

        Returns:
            Findings for out-of-range values (raises instead in strict mode)
        """
        findings = []
        for column, value in zip(COLUMN_NAMES, values):
            if column not in DOCUMENTED_RANGES:
                continue
            low, high = DOCUMENTED_RANGES[column]
            if in_range(value, low, high):
                continue
            if self.strict_ranges:
                raise DataError(f"{column}={value} outside documented range [{low}, {high}]", line=line_no)
            logger.warning(f"Line {line_no}: {column}={value} outside [{low}, {high}]")
            findings.append(RangeFinding(line=line_no, column=column, value=value, low=low, high=high))
        return findings


def _is_float(token: str) -> bool:
    try:
        float(token)
        return True
    except ValueError:
        return False
