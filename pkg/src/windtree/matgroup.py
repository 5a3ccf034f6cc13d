"""Exact arithmetic in SL(2,Z) / PSL(2,Z) and words over a rank-2 alphabet.

Everything here is exact: matrix entries are Python integers (arbitrary
precision), words are plain strings over the four letters ``A a B b`` where
a lowercase letter is the inverse of its uppercase partner.  Two standard
letter interpretations are provided:

* ``GAMMA0_LETTERS``  maps A -> u^2 and B -> tu^2 (the rank-2 parabolic
  subgroup Gamma0 = <u^2, tu^2>, free of rank 2),
* ``G_LETTERS``       maps A -> u and B -> tu^3 (the quotient group used by
  the combinatorial spectrum estimate).

Here u = (1 1; 0 1) and tu denotes the transpose of u.
"""

from __future__ import annotations


class NotInGamma0(ValueError):
    """Raised when a matrix is not an element of <u^2, tu^2>."""


class GroupElement:
    """A PSL(2,Z) element stored as a sign-normalized integer matrix (a b; c d).

    The determinant must be 1.  The canonical representative makes the first
    nonzero entry in the order (c, d, a, b) positive, so equality and hashing
    are O(1) and +g, -g collapse to the same object value.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        if a * d - b * c != 1:
            raise ValueError(f"determinant must be 1, got {a * d - b * c}")
        for first in (c, d, a, b):
            if first != 0:
                if first < 0:
                    a, b, c, d = -a, -b, -c, -d
                break
        self.a, self.b, self.c, self.d = a, b, c, d

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return GroupElement(a * e + b * g, a * f + b * h,
                            c * e + d * g, c * f + d * h)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> "GroupElement":
        return GroupElement(self.a, self.c, self.b, self.d)

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == 1 and self.d == 1

    def norm_sq(self) -> int:
        """Sum of squared entries, invariant under the sign quotient."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"GroupElement({self.a}, {self.b}, {self.c}, {self.d})"


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """Exact product in PSL canonical form."""
    return g * h


IDENTITY = GroupElement(1, 0, 0, 1)
U = GroupElement(1, 1, 0, 1)
TU = GroupElement(1, 0, 1, 1)
U2 = GroupElement(1, 2, 0, 1)
TU2 = GroupElement(1, 0, 2, 1)
U3 = GroupElement(1, 3, 0, 1)
TU3 = GroupElement(1, 0, 3, 1)
ROT = GroupElement(0, 1, -1, 0)
P = U  # the standard parabolic (1 1; 0 1)

LETTERS = "AaBb"

GAMMA0_LETTERS = {"A": U2, "B": TU2}
G_LETTERS = {"A": U, "B": TU3}


def letter_inverse(letter: str) -> str:
    return letter.swapcase()


def free_reduce(word: str) -> str:
    """Cancel adjacent inverse pairs until the word is freely reduced."""
    stack: list[str] = []
    for ch in word:
        if ch not in LETTERS:
            raise ValueError(f"unknown letter {ch!r}")
        if stack and stack[-1] == ch.swapcase():
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def word_inverse(word: str) -> str:
    return word[::-1].swapcase()


def is_reduced(word: str) -> bool:
    return all(word[i + 1] != word[i].swapcase() for i in range(len(word) - 1))


def evaluate(word: str, letter_images: dict[str, GroupElement]) -> GroupElement:
    """Product of the letter images, in PSL canonical form.

    ``letter_images`` gives the images of the uppercase letters A and B;
    lowercase letters evaluate to the corresponding inverses.  The word need
    not be reduced (reduction does not change the product).
    """
    images = {
        "A": letter_images["A"],
        "a": letter_images["A"].inverse(),
        "B": letter_images["B"],
        "b": letter_images["B"].inverse(),
    }
    out = IDENTITY
    for ch in word:
        out = out * images[ch]
    return out


def sanov_decompose(g: GroupElement) -> str:
    """The unique reduced word over <u^2, tu^2> evaluating to g.

    Norm descent: left-multiplying by one of u^{-2}, u^2, tu^{-2}, tu^2 strips
    the leading letter and strictly decreases the entry norm a^2+b^2+c^2+d^2.
    A quick congruence test rejects matrices that are not congruent to the
    identity mod 2; failure of the descent rejects the rest.

    Raises NotInGamma0 when g is not in the subgroup.
    """
    a, b, c, d = g.entries()
    if a % 2 == 0 or d % 2 == 0 or b % 2 != 0 or c % 2 != 0:
        raise NotInGamma0(f"{g!r} is not congruent to the identity mod 2")
    letters: list[str] = []
    while not (b == 0 and c == 0):
        r1 = a * a + b * b
        r2 = c * c + d * d
        p = a * c + b * d
        if min(r1, r2) >= abs(p) or p == 0:
            raise NotInGamma0(f"norm descent stalled at ({a}, {b}, {c}, {d})")
        if r2 <= r1:
            # row1 -/+= 2 row2, i.e. left-multiply by u^{-2} or u^2
            if p > 0:
                letters.append("A")
                a, b = a - 2 * c, b - 2 * d
            else:
                letters.append("a")
                a, b = a + 2 * c, b + 2 * d
        else:
            if p > 0:
                letters.append("B")
                c, d = c - 2 * a, d - 2 * b
            else:
                letters.append("b")
                c, d = c + 2 * a, d + 2 * b
    return "".join(letters)


def reduced_words(max_length: int, min_length: int = 1):
    """Yield every freely reduced word with min_length <= length <= max_length."""
    stack = [ch for ch in LETTERS]
    while stack:
        w = stack.pop()
        if len(w) >= min_length:
            yield w
        if len(w) < max_length:
            last = w[-1]
            for ch in LETTERS:
                if ch != last.swapcase():
                    stack.append(w + ch)
