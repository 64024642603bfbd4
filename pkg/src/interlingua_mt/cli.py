"""Command-line entry point: one subcommand per pipeline stage.

Exit codes: 0 success, 1 stage error, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import aligner, codec, corpus, morphology
from .config import ALIGN_METHODS, PipelineConfig, load_config
from .errors import CorpusError, PipelineError
from .evaluate import evaluate
from .lexicon import load_thesaurus
from .translator import Resources, translate

STAGES = {
    "freq": "corpus",
    "entropy": "codec",
    "codebook": "codec",
    "encode": "codec",
    "decode": "codec",
    "invdict": "morphology",
    "suffixes": "morphology",
    "lemmatize": "morphology",
    "translate": "translator",
    "align": "aligner",
    "eval": "eval",
}


def _read(path) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _lines(text: str) -> list[str]:
    return [l.strip() for l in text.splitlines() if l.strip()]


def _rules(cfg: PipelineConfig, source_text=None):
    if cfg.rules:
        return tuple(morphology.load_rules(cfg.rules))
    # no rule file: induce from the corpus
    sents = corpus.tokenize(source_text if source_text is not None else _read(cfg.corpus))
    vocab = corpus.truncate_vocabulary(corpus.count_words(sents), cfg.vocab_size)
    inv = morphology.build_inverse_dictionary(vocab)
    return tuple(morphology.induce_suffixes(inv, cfg.min_support, cfg.max_suffix))


# ------------------------------------------------------------ subcommands


def cmd_freq(args, cfg, out):
    table = corpus.count_words(corpus.tokenize(_read(args.input)))
    if args.top:
        ranked = table.ranked()[: args.top]
        table = corpus.FrequencyTable(dict(ranked))
    out.write(table.to_tsv())


def cmd_entropy(args, cfg, out):
    text = _read(args.input)
    dist = codec.letter_frequencies(text)
    out.write(f"bits_per_symbol\t{codec.entropy(dist):.9f}\n")
    if args.dist_out:
        _write(args.dist_out, dist.to_tsv())
    if args.ngram:
        model = codec.char_ngram_model(text, args.ngram)
        if args.ngram_out:
            _write(args.ngram_out, model.to_tsv())
        else:
            out.write(model.to_tsv())


def cmd_codebook(args, cfg, out):
    out.write(codec.build_codebook(codec.letter_frequencies(_read(args.input))).to_tsv())


def _codebook(path):
    return codec.CodeBook.from_tsv(_read(path))


def cmd_encode(args, cfg, out):
    cb = _codebook(args.codebook)
    for word in _lines(_read(args.input)):
        out.write(codec.encode(word.upper(), cb) + "\n")


def cmd_decode(args, cfg, out):
    cb = _codebook(args.codebook)
    for bits in _lines(_read(args.input)):
        out.write(codec.decode(bits, cb) + "\n")


def cmd_invdict(args, cfg, out):
    table = corpus.count_words(corpus.tokenize(_read(args.input)))
    vocab = corpus.truncate_vocabulary(table, args.top or cfg.vocab_size)
    out.write(morphology.build_inverse_dictionary(vocab).to_text())


def cmd_suffixes(args, cfg, out):
    inv = morphology.InverseDictionary.from_text(_read(args.input))
    rules = morphology.induce_suffixes(inv, cfg.min_support, cfg.max_suffix)
    out.write(morphology.rules_to_tsv(rules))


def cmd_lemmatize(args, cfg, out):
    rules = _rules(cfg)
    table = morphology.load_lemma_table(cfg.exceptions)
    for word in _lines(_read(args.input)):
        w = word.upper()
        out.write(f"{w}\t{morphology.lemmatize(w, rules, table)}\n")


def cmd_translate(args, cfg, out):
    text = _read(args.input)
    rules = _rules(cfg)
    table = morphology.load_lemma_table(cfg.exceptions)
    thesaurus = load_thesaurus(cfg.thesaurus)
    cb = None
    if cfg.codec:
        cb = codec.build_codebook(codec.letter_frequencies(_read(cfg.corpus) + "\n" + text))
    resources = Resources(rules, table, thesaurus, cb)
    for sent in corpus.tokenize(text):
        result = translate(sent, resources)
        out.write((result.to_json() if cfg.trace else result.target) + "\n")


def _line_sentences(text: str) -> list:
    """One sentence per input line, whatever punctuation the line holds."""
    return [
        corpus.Sentence.from_words([w for s in corpus.tokenize(line) for w in s.words])
        for line in text.rstrip("\n").split("\n")
    ] if text.strip() else []


def cmd_align(args, cfg, out):
    src_text, tgt_text = _read(args.source), _read(args.target)
    src, tgt = _line_sentences(src_text), _line_sentences(tgt_text)
    if len(src) != len(tgt):
        raise PipelineError(f"{len(src)} source lines but {len(tgt)} target lines", "aligner")
    src_train = corpus.tokenize(_read(args.src_corpus)) if args.src_corpus else src
    tgt_train = corpus.tokenize(_read(args.tgt_corpus)) if args.tgt_corpus else tgt
    method = cfg.align_method
    if method == "entropy":
        st = aligner.build_surprisal_table(corpus.count_words(src_train))
        tt = aligner.build_surprisal_table(corpus.count_words(tgt_train))
        for s, t in zip(src, tgt):
            out.write(aligner.align_by_entropy(s, t, st, tt).pharaoh() + "\n")
        return
    sm = aligner.build_bigram_model(src_train)
    tm = aligner.build_bigram_model(tgt_train)
    for s, t in zip(src, tgt):
        if method == "oracle":
            res = aligner.align_oracle(s, t, sm, tm)
        else:
            res = aligner.align_by_bigrams(s, t, sm, tm)
        out.write(res.alignment.pharaoh() + "\n")


def cmd_eval(args, cfg, out):
    report = evaluate(cfg)
    text = report.to_jsonl()
    if args.out:
        _write(args.out, text)
    else:
        out.write(text)
    if not report.complete:
        raise PipelineError(report.error or "evaluation incomplete", report.failed_stage)


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="INI file with a [pipeline] section")
    common.add_argument("--seed", type=int, help="seed for generated test data")
    common.add_argument("--corpus", help="source-language corpus")
    common.add_argument("--thesaurus")
    common.add_argument("--rules", help="suffix rule TSV ('' to induce from the corpus)")
    common.add_argument("--exceptions", help="exception table TSV")
    common.add_argument("--vocab-size", type=int)
    common.add_argument("--min-support", type=int)
    common.add_argument("--max-suffix", type=int)

    parser = argparse.ArgumentParser(prog="interlingua-mt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, help_, input_=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if input_:
            p.add_argument("input", nargs="?", default="-", help="input file (default: stdin)")
        return p

    p = add("freq", "word frequency table as TSV")
    p.add_argument("--top", type=int)
    p = add("entropy", "letter entropy in bits per symbol")
    p.add_argument("--dist-out", help="write the letter distribution TSV here")
    p.add_argument("--ngram", type=int, choices=(2, 3))
    p.add_argument("--ngram-out")
    add("codebook", "Huffman codebook from letter frequencies")
    for name in ("encode", "decode"):
        p = add(name, f"{name} one item per line with a codebook")
        p.add_argument("--codebook", required=True)
    p = add("invdict", "a-tergo dictionary, one word per line")
    p.add_argument("--top", type=int)
    add("suffixes", "induce suffix rules from an a-tergo dictionary")
    add("lemmatize", "lemmatize one word per line")
    p = add("translate", "translate text through the interlingua")
    p.add_argument("--trace", action="store_true", default=None, help="emit JSON decision traces")
    p.add_argument("--codec", action="store_true", default=None, help="route words through the letter codec")
    p = add("align", "word alignment of line-aligned files (Pharaoh output)", input_=False)
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--method", choices=ALIGN_METHODS)
    p.add_argument("--src-corpus")
    p.add_argument("--tgt-corpus")
    p = add("eval", "run every stage and report statistics as JSON lines", input_=False)
    p.add_argument("--target-corpus")
    p.add_argument("--out")
    return parser


def _config(args) -> PipelineConfig:
    cfg = load_config(args.config)
    return cfg.override(
        seed=args.seed,
        corpus=args.corpus,
        thesaurus=args.thesaurus,
        rules=args.rules,
        exceptions=args.exceptions,
        vocab_size=args.vocab_size,
        min_support=args.min_support,
        max_suffix=args.max_suffix,
        trace=getattr(args, "trace", None),
        codec=getattr(args, "codec", None),
        align_method=getattr(args, "method", None),
        target_corpus=getattr(args, "target_corpus", None),
    )


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler = globals()[f"cmd_{args.command}"]
    try:
        cfg = _config(args)
        handler(args, cfg, out)
    except PipelineError as exc:
        stage = exc.stage if exc.stage != "pipeline" else STAGES[args.command]
        print(f"interlingua-mt {args.command}: [{stage}] {exc.args[0]}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"interlingua-mt {args.command}: [{STAGES[args.command]}] {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
