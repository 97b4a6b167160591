from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from monocodes.core.config import settings
from monocodes.domain.code import MonomialCode


class CodeDescription(BaseModel):
    """Schema for a code description file."""

    m: int = Field(..., ge=1, description="Number of variables; the code length is 2^m")
    monomials: list[int] = Field(default_factory=list, description="Monomials of I as bit-set integers")
    meta: dict[str, Any] = Field(default_factory=dict, description="Free-form provenance data")

    @field_validator("m")
    @classmethod
    def check_variable_count(cls, value: int) -> int:
        if value > settings.max_variables:
            raise ValueError(f"m={value} exceeds max_variables={settings.max_variables}")
        return value

    @field_validator("monomials")
    @classmethod
    def canonicalise(cls, value: list[int]) -> list[int]:
        if any(bits < 0 for bits in value):
            raise ValueError("monomial bit sets must be nonnegative")
        return sorted(set(value))

    @model_validator(mode="after")
    def check_range(self) -> "CodeDescription":
        limit = 1 << self.m
        out_of_range = [bits for bits in self.monomials if bits >= limit]
        if out_of_range:
            raise ValueError(f"monomials {out_of_range} do not fit in m={self.m} variables")
        return self

    @classmethod
    def from_code(cls, code: MonomialCode, meta: dict[str, Any] | None = None) -> "CodeDescription":
        return cls(m=code.m, monomials=code.monomials.bit_sets(), meta=meta or {})

    def to_code(self) -> MonomialCode:
        return MonomialCode.from_bits(self.m, self.monomials)
