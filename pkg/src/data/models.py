"""Data models for type safety and validation."""

from typing import Dict, List, Tuple

from pydantic import BaseModel, Field

FEATURE_NAMES: Tuple[str, ...] = ('frequency', 'angle', 'chord', 'velocity', 'thickness')
TARGET_NAME = 'noise'
COLUMN_NAMES: Tuple[str, ...] = FEATURE_NAMES + (TARGET_NAME,)

# Ranges published for the UCI airfoil self-noise file. Angle and chord are
# only checked for sign: the published chord lower bound (0.254) disagrees
# with the file's 0.0254.
DOCUMENTED_RANGES: Dict[str, Tuple[float, float]] = {
    'frequency': (50.0, 20000.0),
    'velocity': (31.7, 71.3),
    'thickness': (0.00040068, 0.0584),
    'noise': (103.38, 140.987),
}


class Sample(BaseModel):
    """One row of the airfoil self-noise dataset."""
    frequency: float = Field(..., gt=0, allow_inf_nan=False, description="Hz")
    angle_of_attack: float = Field(..., ge=0, allow_inf_nan=False, description="degrees")
    chord_length: float = Field(..., gt=0, allow_inf_nan=False, description="meters")
    free_stream_velocity: float = Field(..., gt=0, allow_inf_nan=False, description="m/s")
    suction_side_displacement_thickness: float = Field(..., ge=0, allow_inf_nan=False, description="meters")
    noise: float = Field(..., gt=50, lt=200, allow_inf_nan=False, description="dB")

    def features(self) -> List[float]:
        """Input values in dataset column order."""
        return [
            self.frequency,
            self.angle_of_attack,
            self.chord_length,
            self.free_stream_velocity,
            self.suction_side_displacement_thickness,
        ]

    @classmethod
    def from_row(cls, row) -> "Sample":
        """Build a sample from six values in dataset column order."""
        return cls(
            frequency=row[0],
            angle_of_attack=row[1],
            chord_length=row[2],
            free_stream_velocity=row[3],
            suction_side_displacement_thickness=row[4],
            noise=row[5],
        )


class RangeFinding(BaseModel):
    """A value outside its documented range."""
    line: int
    column: str
    value: float
    low: float
    high: float


class LoadReport(BaseModel):
    """Summary of a dataset load."""
    path: str
    rows: int = Field(..., ge=0)
    observed_ranges: Dict[str, Tuple[float, float]] = Field(default_factory=dict)
    findings: List[RangeFinding] = Field(default_factory=list)
