"""Walk the bundled Croatian sentence through every stage and print each step."""
import argparse
import json

from interlingua_mt import fixtures
from interlingua_mt.lexicon import collapse, lookup
from interlingua_mt.morphology import lemmatize
from interlingua_mt.translator import translate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("sentence", nargs="?", default=fixtures.EXAMPLE_SENTENCE)
    ap.add_argument("--thesaurus", default=str(fixtures.THESAURUS))
    args = ap.parse_args()

    res = fixtures.default_resources(thesaurus=args.thesaurus)
    print("case forms of ČOVJEK:")
    for form in fixtures.COVJEK_FORMS:
        print(f"  {form:10s} -> {lemmatize(form, res.rules, res.lemma_table)}")
    print("collapsed ČOVJE-:", collapse(lookup(res.thesaurus, "ČOVJE-")).render())

    result = translate(args.sentence, res)
    for tok in result.trace:
        print(json.dumps(tok, ensure_ascii=False))
    print("interlingua:", " ".join(f"{t.meaning.tag}:{t.meaning.code}" for t in result.interlingua))
    print("target:", result.target)


if __name__ == "__main__":
    main()
