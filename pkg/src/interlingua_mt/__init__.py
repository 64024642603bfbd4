"""Dictionary-and-entropy machine translation pipeline.

Stages: tokenization and frequency tables (:mod:`.corpus`), letter coding
(:mod:`.codec`), a-tergo morphology (:mod:`.morphology`), the meaning-keyed
thesaurus (:mod:`.lexicon`), categorial grammar (:mod:`.grammar`),
understanding/generation (:mod:`.translator`) and word alignment
(:mod:`.aligner`).
"""

__version__ = "0.1.0"
