"""Data models for combinatorial Bennequin surfaces."""

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class Band:
    """A twisted band attached along an arc, on its own page."""

    index: int
    arc: str
    endpoints: tuple[str, str]
    sign: int


@dataclass(frozen=True)
class SingularityCounts:
    """Signed counts of elliptic and hyperbolic points."""

    e_plus: int
    e_minus: int
    h_plus: int
    h_minus: int

    @property
    def euler_characteristic(self) -> int:
        return (self.e_plus + self.e_minus) - (self.h_plus + self.h_minus)


@dataclass(frozen=True)
class BennequinSurfaceData:
    """Disks for the marked points joined by one band per leading half-twist."""

    disks: tuple[str, ...]
    bands: tuple[Band, ...] = ()
    residual: tuple[str, ...] = ()
    permutation: tuple[int, ...] = ()
    collar_conditions: bool = False
    on_disk_page: bool = False

    @property
    def n(self) -> int:
        return len(self.disks)

    @property
    def band_count(self) -> int:
        return len(self.bands)

    @property
    def all_bands_positive(self) -> bool:
        return all(band.sign > 0 for band in self.bands)


@dataclass(frozen=True)
class BoundaryGenus:
    """Boundary components, connectivity and genus of a built surface."""

    components: int
    connected: bool
    genus: Optional[int] = None
    graph_components: int = 1


@dataclass
class BennequinReport:
    """Everything the ``bennequin`` command reports about one surface."""

    data: BennequinSurfaceData
    chi: int
    counts: SingularityCounts
    boundary: BoundaryGenus
    sl: Optional[int]
    bound_holds: Optional[bool]
    sharp: bool
    angles: list[float] = field(default_factory=list)
    disk_self_linking: Optional[int] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.data.n,
            "l": self.data.band_count,
            "chi": self.chi,
            "e_plus": self.counts.e_plus,
            "e_minus": self.counts.e_minus,
            "h_plus": self.counts.h_plus,
            "h_minus": self.counts.h_minus,
            "mu": self.boundary.components,
            "connected": self.boundary.connected,
            "genus": self.boundary.genus,
            "sl": self.sl,
            "bound_holds": self.bound_holds,
            "sharp": self.sharp,
            "collar_conditions": self.data.collar_conditions,
            "bands": [
                {
                    "index": band.index,
                    "arc": band.arc,
                    "endpoints": list(band.endpoints),
                    "sign": band.sign,
                    "angle": angle,
                }
                for band, angle in zip(self.data.bands, self.angles)
            ],
            "residual": list(self.data.residual),
            "disk_sl": self.disk_self_linking,
        }
