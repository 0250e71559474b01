from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import InvalidInput

SYMBOLS = ("I_n", "I_n*", "II", "II*", "III", "III*", "IV", "IV*")
NEG_INF = "-inf"
UNASSERTED = "unasserted"


@dataclass(frozen=True)
class KodairaType:
    symbol: str
    n: int | None = None

    def __post_init__(self):
        if self.symbol not in SYMBOLS:
            raise InvalidInput(f"unknown Kodaira symbol {self.symbol!r}")
        if self.symbol.startswith("I_n"):
            if not isinstance(self.n, int) or self.n < 0:
                raise InvalidInput("I_n and I_n* need n >= 0")
        elif self.n is not None:
            raise InvalidInput(f"{self.symbol} takes no index")

    def __str__(self):
        if self.symbol == "I_n":
            return f"I_{self.n}"
        if self.symbol == "I_n*":
            return f"I_{self.n}*"
        return self.symbol

    @classmethod
    def parse(cls, text: str) -> "KodairaType":
        m = re.fullmatch(r"I_?(\d+)(\*?)", text.strip())
        if m:
            return cls("I_n*" if m.group(2) else "I_n", int(m.group(1)))
        return cls(text.strip())


I0, I0_STAR = KodairaType("I_n", 0), KodairaType("I_n*", 0)
II, II_STAR = KodairaType("II"), KodairaType("II*")
III, III_STAR = KodairaType("III"), KodairaType("III*")
IV, IV_STAR = KodairaType("IV"), KodairaType("IV*")


@dataclass(frozen=True)
class SingularFibre:
    location: str
    kodaira: KodairaType | None = None
    multiplicity: int | None = None

    @property
    def symbol(self) -> str:
        if self.kodaira is None:
            return "singular"
        m = self.multiplicity
        return f"{m}{self.kodaira}" if m and m > 1 else str(self.kodaira)

    def to_json(self):
        return {"location": self.location,
                "type": None if self.kodaira is None else str(self.kodaira),
                "multiplicity": self.multiplicity, "symbol": self.symbol}
