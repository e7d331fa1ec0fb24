"""One-off: pull the published witness words out of the source document.

Writes src/burau/data/words_affine_a3.json and words_d4_modp.json.  Kept in
scripts/ for provenance; the package ships the generated JSON, and a checksum
test pins it against accidental edits.
"""

import json
import re
import sys

SIGMA = re.compile(r"\\sigma_(?:\{(\d+)\}|(\d+))(?:\^\{?(-?\d+)\}?)?")


def parse_sigma_word(latex: str) -> list[int]:
    out: list[int] = []
    for m in SIGMA.finditer(latex):
        idx = int(m.group(1) or m.group(2))
        exp = int(m.group(3)) if m.group(3) else 1
        letter = idx if exp > 0 else -idx
        out.extend([letter] * abs(exp))
    return out


def bracketed_ints(text: str, start: int) -> list[int]:
    lo = text.index("[", start)
    hi = text.index("]", lo)
    return [int(t) for t in re.findall(r"-?\d+", text[lo:hi])]


def main() -> None:
    src = open(sys.argv[1]).read()

    def line_for(prefix: str) -> str:
        for line in src.splitlines():
            if line.strip().startswith(prefix):
                return line
        raise SystemExit(f"not found: {prefix}")

    affine = {
        "a": parse_sigma_word(line_for("a & =")),
        "b": parse_sigma_word(line_for("b & =")),
        "a_prime": parse_sigma_word(line_for("a' &=")),
        "b_prime": parse_sigma_word(line_for("b' &=")),
        "alpha": {"conjugator": "a", "generator": 3},
        "beta": {"conjugator": "b", "generator": 2},
    }
    for k in ("a", "b", "a_prime", "b_prime"):
        print(k, len(affine[k]), affine[k])

    d4: dict[str, dict] = {}
    for m in re.finditer(r"For \$p=(\d+)\$", src):
        p = int(m.group(1))
        word = bracketed_ints(src, m.end())
        d4[str(p)] = {"beta": word, "generator": 1}
        print("p =", p, "len =", len(word), "head =", word[:10])
    assert sorted(int(k) for k in d4) == list(range(6, 17)), sorted(d4)

    with open("src/burau/data/words_affine_a3.json", "w") as f:
        json.dump(affine, f, indent=1)
        f.write("\n")
    with open("src/burau/data/words_d4_modp.json", "w") as f:
        json.dump(d4, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
