from pydantic import BaseModel, Field, model_validator


class ChannelTable(BaseModel):
    """Schema for a channel transition table file."""

    alphabet: list[str] | None = Field(None, description="Output symbol labels")
    p0: list[float] = Field(..., min_length=1, description="W(y|0) for every output y")
    p1: list[float] = Field(..., min_length=1, description="W(y|1) for every output y")
    involution: list[int] = Field(..., min_length=1, description="Symmetry permutation of the outputs")

    @model_validator(mode="after")
    def check_lengths(self) -> "ChannelTable":
        size = len(self.p0)
        if len(self.p1) != size or len(self.involution) != size:
            raise ValueError("p0, p1 and involution must have the same length")
        if self.alphabet is not None and len(self.alphabet) != size:
            raise ValueError("alphabet must label every output symbol")
        return self
