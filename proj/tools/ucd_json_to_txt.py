#!/usr/bin/env python3
"""Rebuild the plain-text UCD files under data/ucd from the ucd-full JSON package.

The sandbox that produced this repository had no route to unicode.org, but the
npm package ``ucd-full@15.1.0`` ships the complete 15.1 database as JSON. This
script writes the subset of files the table generator reads, in the original
semicolon-separated layout.

    npm pack ucd-full@15.1.0 && tar xzf ucd-full-15.1.0.tgz
    python3 tools/ucd_json_to_txt.py package data/ucd
"""
import json
import pathlib
import sys


def load(src, name, key=None):
    with open(src / name, encoding="utf-8") as f:
        data = json.load(f)
    return data[key or pathlib.Path(name).stem]


def rng(r):
    return r[0] if len(r) == 1 else f"{r[0]}..{r[1]}"


def main(src, dst):
    src, dst = pathlib.Path(src), pathlib.Path(dst)
    dst.mkdir(parents=True, exist_ok=True)
    header = "# Unicode 15.1.0 (rebuilt from ucd-full 15.1.0)\n"

    fields = ["codepoint", "name", "category", "canonicalCombiningClass",
              "bidirectionalCategory", "characterDecompositionMapping",
              "decimalDigitValue", "digitValue", "numericValue", "mirrored",
              "unicode1.0Name", "isoComment", "upper", "lower", "title"]
    with open(dst / "UnicodeData.txt", "w", encoding="utf-8", newline="\n") as out:
        for e in load(src, "UnicodeData.json"):
            out.write(";".join(e.get(k, "") for k in fields) + "\n")

    with open(dst / "Scripts.txt", "w", encoding="utf-8", newline="\n") as out:
        out.write(header)
        for e in load(src, "Scripts.json"):
            out.write(f"{rng(e['range'])} ; {e['script']}\n")

    with open(dst / "Blocks.txt", "w", encoding="utf-8", newline="\n") as out:
        out.write(header)
        for e in load(src, "Blocks.json"):
            out.write(f"{rng(e['range'])}; {e['block']}\n")

    with open(dst / "DerivedNormalizationProps.txt", "w", encoding="utf-8", newline="\n") as out:
        out.write(header)
        for e in load(src, "DerivedNormalizationProps.json"):
            if e["property"] == "Full_Composition_Exclusion":
                out.write(f"{rng(e['range'])} ; {e['property']}\n")

    with open(dst / "CaseFolding.txt", "w", encoding="utf-8", newline="\n") as out:
        out.write(header)
        for e in load(src, "CaseFolding.json"):
            out.write(f"{e['codepoint']}; {e['status']}; {e['mapping']};\n")

    with open(dst / "emoji-data.txt", "w", encoding="utf-8", newline="\n") as out:
        out.write(header)
        for e in load(src, "emoji/emoji-data.json", "emoji-data"):
            out.write(f"{rng(e['range'])} ; {e['property']}\n")

    cols = ["sourceSequence", "NFCSequence", "NFDSequence", "NFKCSequence", "NFKDSequence"]
    with open(dst / "NormalizationTest.txt", "w", encoding="utf-8", newline="\n") as out:
        out.write(header)
        for e in load(src, "NormalizationTest.json"):
            if e["sourceSequence"][0].startswith("@"):
                out.write(e["sourceSequence"][0] + "\n")
                continue
            out.write(";".join(" ".join(e[c]) for c in cols) + ";\n")


if __name__ == "__main__":
    main(*sys.argv[1:3])
