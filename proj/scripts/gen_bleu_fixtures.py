#!/usr/bin/env python3
"""Regenerates tests/fixtures/bleu_fixtures.json.

Independent oracle for the BLEU implementation: reproduces the reference
detokenized-BLEU semantics (mteval-v13a tokenization, exponential smoothing
of zero n-gram counts, mixed case, single reference) using Python's regex
engine, and freezes expected scores for a set of small corpora.

Run from the repo root:  python3 scripts/gen_bleu_fixtures.py
"""

import json
import math
import random
import re
from collections import Counter

NGRAM_ORDER = 4

_RE = [
    # punctuation blocks split unconditionally (Western-language rules)
    (re.compile(r"([\{-\~\[-\` -\&\(-\+\:-\@\/])"), r" \1 "),
    # period/comma split unless preceded by a digit
    (re.compile(r"([^0-9])([\.,])"), r"\1 \2 "),
    # period/comma split unless followed by a digit
    (re.compile(r"([\.,])([^0-9])"), r" \1 \2"),
    # dash split when preceded by a digit
    (re.compile(r"([0-9])(\-)"), r"\1 \2 "),
]


def tokenize_13a(line: str) -> list[str]:
    norm = line.replace("<skipped>", "")
    norm = norm.replace("-\n", "")
    norm = norm.replace("\n", " ")
    if "&" in norm:
        norm = norm.replace("&quot;", '"')
        norm = norm.replace("&amp;", "&")
        norm = norm.replace("&lt;", "<")
        norm = norm.replace("&gt;", ">")
    norm = f" {norm} "
    for pattern, repl in _RE:
        norm = pattern.sub(repl, norm)
    return norm.split()


def extract_ngrams(tokens: list[str]) -> Counter:
    counts = Counter()
    for n in range(1, NGRAM_ORDER + 1):
        for i in range(len(tokens) - n + 1):
            counts[(n, " ".join(tokens[i : i + n]))] += 1
    return counts


def my_log(num: float) -> float:
    if num == 0.0:
        return -9999999999
    return math.log(num)


def corpus_bleu(hyps: list[str], refs: list[str]) -> dict:
    assert len(hyps) == len(refs) and hyps
    correct = [0] * NGRAM_ORDER
    total = [0] * NGRAM_ORDER
    sys_len = 0
    ref_len = 0
    for hyp, ref in zip(hyps, refs):
        hyp_toks = tokenize_13a(hyp.rstrip())
        ref_toks = tokenize_13a(ref.rstrip())
        sys_len += len(hyp_toks)
        ref_len += len(ref_toks)
        ref_ngrams = extract_ngrams(ref_toks)
        for (n, gram), cnt in extract_ngrams(hyp_toks).items():
            total[n - 1] += cnt
            correct[n - 1] += min(cnt, ref_ngrams.get((n, gram), 0))

    precisions = [0.0] * NGRAM_ORDER
    smooth_mteval = 1.0
    for n in range(NGRAM_ORDER):
        if total[n] == 0:
            break
        if correct[n] == 0:
            smooth_mteval *= 2
            precisions[n] = 100.0 / (smooth_mteval * total[n])
        else:
            precisions[n] = 100.0 * correct[n] / total[n]

    if sys_len < ref_len:
        bp = math.exp(1 - ref_len / sys_len) if sys_len > 0 else 0.0
    else:
        bp = 1.0
    score = bp * math.exp(sum(my_log(p) for p in precisions) / NGRAM_ORDER)
    return {
        "score": score,
        "precisions": precisions,
        "brevity_penalty": bp,
        "hyp_len": sys_len,
        "ref_len": ref_len,
    }


TOKENIZER_CASES = [
    "Hello, world!",
    "abc",
    "",
    "It costs 1,234.56 today.",
    "2-3 apples and 10-year-old wine",
    "a-b stays joined",
    "don't split the apostrophe",
    "«quoted» and “curly” stay glued",
    "x &amp; y &quot;z&quot; &lt;tag&gt;",
    "a<skipped>b <skipped> c",
    "tabs\tand  double  spaces",
    "100% (sure): yes; no/maybe [ok] {fine}",
    "semi;colon:and/slash@at#hash",
    "Reykjavík, Ísland.",
    "é.com costs 3.14, not 3,14.",
    "nbsp a b splits",
    "trailing dots...",
    "5- 6-7 -8 9 -",
]


def _sentences(lang_words, rng, n, lo=4, hi=14):
    out = []
    for _ in range(n):
        k = rng.randint(lo, hi)
        out.append(" ".join(rng.choice(lang_words) for _ in range(k)))
    return out


def build_corpora() -> list[dict]:
    rng = random.Random(20210815)
    vocab = (
        "the a of to and in that it is was for on with as his her they at be "
        "this have from or one had by word but not what all were when we there "
        "can an your which their said if do will each about how up out them"
    ).split()
    corpora = []

    refs = [
        "The cat sat on the mat.",
        "It is a truth universally acknowledged.",
        "Good morning, everyone!",
    ]
    corpora.append({"name": "identity", "hyps": list(refs), "refs": refs})

    corpora.append(
        {
            "name": "near_match",
            "hyps": [
                "The cat sat on a mat.",
                "It is a truth widely acknowledged.",
                "Good morning, everybody!",
            ],
            "refs": refs,
        }
    )

    corpora.append(
        {
            "name": "no_overlap",
            "hyps": ["zebra quagga okapi", "fjord glacier basalt lava"],
            "refs": ["one two three four", "five six seven eight nine"],
        }
    )

    long_refs = _sentences(vocab, rng, 8, 10, 16)
    corpora.append(
        {
            "name": "short_hyps_brevity",
            "hyps": [" ".join(r.split()[: max(2, len(r.split()) // 2)]) for r in long_refs],
            "refs": long_refs,
        }
    )

    short_refs = _sentences(vocab, rng, 6, 4, 7)
    corpora.append(
        {
            "name": "long_hyps_no_penalty",
            "hyps": [r + " " + " ".join(rng.choice(vocab) for _ in range(5)) for r in short_refs],
            "refs": short_refs,
        }
    )

    corpora.append(
        {
            "name": "zero_fourgram",
            "hyps": ["one two three nine five six"],
            "refs": ["one two three four five six"],
        }
    )

    corpora.append(
        {
            "name": "zero_tri_and_fourgram",
            "hyps": ["one two five one eight two"],
            "refs": ["one two three four five six seven eight"],
        }
    )

    corpora.append(
        {
            "name": "tiny_sentences",
            "hyps": ["yes", "no no", "ok ok ok"],
            "refs": ["yes", "no never", "ok fine ok"],
        }
    )

    corpora.append(
        {
            "name": "nordic_text",
            "hyps": [
                "Hann býr í Reykjavík, á Íslandi.",
                "Göteborg är en stad i Sverige.",
                "Træet står i haven.",
            ],
            "refs": [
                "Hann býr í Reykjavík á Íslandi.",
                "Göteborg är en storstad i Sverige.",
                "Træet er i haven.",
            ],
        }
    )

    corpora.append(
        {
            "name": "numbers_punct",
            "hyps": [
                "Prices rose 3.5% to 1,204.99 in 2020-2021.",
                "Call 555-0199, ext. 42!",
            ],
            "refs": [
                "Prices rose 3.4% to 1,204.99 in 2020-2021.",
                "Call 555-0199, extension 42!",
            ],
        }
    )

    corpora.append(
        {
            "name": "entities",
            "hyps": ["Tom &amp; Jerry said &quot;hi&quot;", "a &lt; b &gt; c"],
            "refs": ["Tom & Jerry said \"hi\"", "a < b > c"],
        }
    )

    corpora.append(
        {
            "name": "empty_hyp_lines",
            "hyps": ["", "the cat sat", ""],
            "refs": ["something here", "the cat sat", "more text here"],
        }
    )

    corpora.append(
        {
            "name": "single_sentence",
            "hyps": ["the quick brown fox jumps over the lazy dog"],
            "refs": ["the quick brown fox jumped over the lazy dog"],
        }
    )

    refs50 = _sentences(vocab, rng, 50)
    hyps50 = []
    for r in refs50:
        toks = r.split()
        for i in range(len(toks)):
            if rng.random() < 0.2:
                toks[i] = rng.choice(vocab)
        if rng.random() < 0.3:
            toks = toks[: max(3, len(toks) - 2)]
        hyps50.append(" ".join(toks))
    corpora.append({"name": "random_50", "hyps": hyps50, "refs": refs50})

    return corpora


def main():
    corpora = build_corpora()
    for c in corpora:
        c["expected"] = corpus_bleu(c["hyps"], c["refs"])
    doc = {
        "tokenizer_cases": [
            {"input": s, "tokens": tokenize_13a(s)} for s in TOKENIZER_CASES
        ],
        "corpora": corpora,
    }
    out = "tests/fixtures/bleu_fixtures.json"
    with open(out, "w", encoding="utf-8") as f:
        json.dump(doc, f, ensure_ascii=True, indent=1)
        f.write("\n")
    print(f"wrote {out}: {len(corpora)} corpora, {len(TOKENIZER_CASES)} tokenizer cases")


if __name__ == "__main__":
    main()
