# Copyright 2026 The igpipe Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Oracle for the classifier's TF-IDF feature selection.

Rebuilds the 1-3 gram TF-IDF matrix of tests/data/synthetic_train.csv with
scikit-learn (smoothed idf, l2 row normalization), scores each n-gram by the
absolute difference of its per-class mean, and writes the top 70 n-grams in
rank order with their idf to tests/golden/synthetic_features.csv. Scores are
rounded to 12 decimals before ranking so that ties do not depend on
summation order; ties break lexicographically.

Usage: python3 tests/oracle/classifier_oracle.py
"""

import csv
import pathlib
import re

import numpy as np
from sklearn.feature_extraction.text import TfidfVectorizer

K = 70
WORD = re.compile(r"[A-Za-z0-9\x80-\U0010ffff]+(?:['-][A-Za-z0-9\x80-\U0010ffff]+)*")


def ngrams(text):
    words = [w.lower() for w in WORD.findall(text)]
    out = []
    for n in (1, 2, 3):
        out += [" ".join(words[i:i + n]) for i in range(len(words) - n + 1)]
    return out


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    with open(root / "data" / "synthetic_train.csv", newline="") as f:
        rows = list(csv.DictReader(f))
    vec = TfidfVectorizer(analyzer=ngrams, lowercase=False, smooth_idf=True,
                          norm="l2", sublinear_tf=False)
    x = vec.fit_transform([r["text"] for r in rows]).toarray()
    labels = np.array([r["label"] == "regulative" for r in rows])
    score = np.abs(x[labels].mean(axis=0) - x[~labels].mean(axis=0))
    names = vec.get_feature_names_out()
    order = sorted(range(len(names)),
                   key=lambda i: (-round(float(score[i]), 12), names[i]))
    with open(root / "golden" / "synthetic_features.csv", "w",
              newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["rank", "ngram", "idf", "score"])
        for rank, i in enumerate(order[:K], 1):
            w.writerow([rank, names[i], repr(float(vec.idf_[i])),
                        repr(float(score[i]))])
    print(f"{len(names)} n-grams, kept {K}")


if __name__ == "__main__":
    main()
