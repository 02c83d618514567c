from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class QueryRecord:
    """One simulated oracle call"""

    original_n: int
    reduced_n: int
    budget: int
    reduced_budget: int
    fvs_of_query: int | None
    answer: bool
    vertices: tuple[int, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["vertices"] = list(self.vertices)
        return data
