"""Braid words and the toric / quasitoric families.

A braid word on n strands is a sequence of nonzero letters; letter k encodes
the generator sigma_|k| raised to sign(k).  Words are plain sequences: no
free-group reduction or Markov-move normalization is performed here (closure
invariance is exercised through the polynomial engines instead).

Text form: ``n: k1 k2 ... km`` (strand count, colon, signed letters).
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "BraidWord",
    "toric",
    "quasitoric_beta",
    "validate_quasitoric",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for k in self.letters:
            if not isinstance(k, int) or k == 0 or abs(k) > self.strands - 1:
                raise ValueError(
                    f"letter {k!r} is not a valid generator on {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sum(self) -> int:
        """Sum of letter signs; the writhe of the closure diagram."""
        return sum(1 if k > 0 else -1 for k in self.letters)

    def permutation(self) -> tuple:
        """Underlying permutation: entry i is the end position of strand i."""
        perm = list(range(self.strands))
        for k in self.letters:
            i = abs(k) - 1
            for s in range(self.strands):
                if perm[s] == i:
                    perm[s] = i + 1
                elif perm[s] == i + 1:
                    perm[s] = i
        return tuple(perm)

    def closure_component_count(self) -> int:
        """Number of cycles of the underlying permutation."""
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for s in range(self.strands):
            if not seen[s]:
                count += 1
                t = s
                while not seen[t]:
                    seen[t] = True
                    t = perm[t]
        return count

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in self.letters))

    def conjugate_by(self, letter: int) -> "BraidWord":
        """sigma^-1 . word . sigma for the given signed letter."""
        return BraidWord(self.strands, (-letter, *self.letters, letter))

    def stabilize(self, positive: bool = True) -> "BraidWord":
        """Markov stabilization: append sigma_n^{+-1} on strands+1 strands."""
        k = self.strands if positive else -self.strands
        return BraidWord(self.strands + 1, self.letters + (k,))

    def format_text(self) -> str:
        return f"{self.strands}: " + " ".join(str(k) for k in self.letters)

    @staticmethod
    def parse_text(text: str) -> "BraidWord":
        head, _, tail = text.partition(":")
        if not _:
            raise ValueError(f"braid text needs 'n: letters', got {text!r}")
        try:
            strands = int(head.strip())
            letters = tuple(int(tok) for tok in tail.split())
        except ValueError as exc:
            raise ValueError(f"bad braid text {text!r}") from exc
        return BraidWord(strands, letters)


def toric(p: int, q: int) -> BraidWord:
    """The p-strand braid (sigma_1 ... sigma_{p-1})^q; closure is T(p, q)."""
    if p < 2 or q < 1:
        raise ValueError("toric braids need p >= 2 and q >= 1")
    return BraidWord(p, tuple(range(1, p)) * q)


def quasitoric_beta(r: int, top_sign: int = 1) -> BraidWord:
    """The quasitoric family member of type (r+1, 3).

    Three identical blocks; within a block the letters descend
    sigma_r, sigma_{r-1}, ..., sigma_1 with signs alternating down the rows,
    starting from top_sign on sigma_r.  The sign matrix is constant along
    each row, so this single bit determines the whole word.
    """
    if r < 1:
        raise ValueError("quasitoric_beta requires r >= 1")
    if top_sign not in (1, -1):
        raise ValueError("top_sign must be +1 or -1")
    block = tuple(top_sign * (-1) ** (i - 1) * (r + 1 - i) for i in range(1, r + 1))
    return BraidWord(r + 1, block * 3)


def validate_quasitoric(b: BraidWord, r: int) -> bool:
    """True iff b is a type-(r+1, 3) quasitoric word with a valid sign matrix.

    Shape: three blocks of sigma_r, ..., sigma_1; signs constant along rows
    (epsilon_ij * epsilon_ij+1 > 0) and alternating down columns
    (epsilon_ij * epsilon_i+1j < 0).
    """
    if r < 1 or b.strands != r + 1 or len(b.letters) != 3 * r:
        return False
    eps = [[0] * 3 for _ in range(r)]
    for j in range(3):
        for i in range(r):
            k = b.letters[j * r + i]
            if abs(k) != r - i:
                return False
            eps[i][j] = 1 if k > 0 else -1
    for i in range(r):
        for j in range(2):
            if eps[i][j] * eps[i][j + 1] <= 0:
                return False
    for i in range(r - 1):
        for j in range(3):
            if eps[i][j] * eps[i + 1][j] >= 0:
                return False
    return True
