import logging

import numpy as np
import pytest

from conftest import FIXTURE_H
from qsem import (
    Corpus,
    Document,
    Provenance,
    StateVector,
    Vocabulary,
    build_hal,
    corpus_space,
    global_space,
    symmetrize,
    top_associates,
    word_space,
    word_vector,
)
from qsem.errors import NormalizationError, ParameterError, UnknownWordError


def test_vocabulary_sorted_and_bijective(fixture_corpus):
    vocab = fixture_corpus.vocabulary
    assert vocab.words == ("arms", "ignorant", "of", "president", "reagan", "scandal", "the")
    for i, w in enumerate(vocab.words):
        assert vocab.index(w) == i
        assert vocab.word(i) == w


def test_vocabulary_rejects_duplicates():
    with pytest.raises(ParameterError):
        Vocabulary(["a", "b", "a"])


def test_vocabulary_unknown_word():
    vocab = Vocabulary(["a", "b"])
    with pytest.raises(UnknownWordError) as err:
        vocab.index("zebra")
    assert err.value.word == "zebra"


def test_corpus_layout():
    docs = [Document("x", ("b", "a")), Document("y", ("a", "c", "a"))]
    corpus = Corpus(docs)
    assert corpus.vocabulary.words == ("a", "b", "c")
    assert corpus.token_ids.tolist() == [1, 0, 0, 2, 0]
    assert corpus.doc_offsets.tolist() == [0, 2, 5]
    assert corpus.frequency("a") == 3
    assert corpus.frequency("c") == 1
    assert corpus.n_tokens == 5


def test_corpus_with_explicit_vocabulary():
    vocab = Vocabulary(["a", "b", "q"])
    corpus = Corpus([Document("x", ("a", "b"))], vocab)
    assert corpus.vocabulary is vocab
    assert corpus.frequency("q") == 0


def test_build_hal_matches_fixture(fixture_corpus):
    H = build_hal(fixture_corpus, 5)
    assert np.array_equal(H.to_dense(), FIXTURE_H)


def test_build_hal_rejects_bad_window(fixture_corpus):
    with pytest.raises(ParameterError):
        build_hal(fixture_corpus, 0)


def test_windows_do_not_cross_documents():
    # same tokens, one vs two documents: the pair across the break vanishes
    one = Corpus([Document("a", ("x", "y"))])
    two = Corpus([Document("a", ("x",)), Document("b", ("y",))])
    assert build_hal(one, 5).weight("y", "x") == 6 - 1
    assert np.array_equal(build_hal(two, 5).to_dense(), np.zeros((2, 2), dtype=np.int64))


def test_symmetrize_adds_transpose(fixture_corpus):
    H = build_hal(fixture_corpus, 5)
    S = symmetrize(H)
    dense = S.to_dense()
    assert np.array_equal(dense, dense.T)
    assert np.array_equal(dense, FIXTURE_H + FIXTURE_H.T)
    # repeated pairs in both directions accumulate, not overwrite
    rep = Corpus([Document("r", ("a", "b", "a"))])
    S2 = symmetrize(build_hal(rep, 5))
    assert S2.weight("a", "b") == 5 + 5  # b<-a and a<-b, distance 1 each
    assert S2.weight("a", "a") == 2 * 4  # a<-a at distance 2, doubled


def test_corpus_space_is_symmetrized_hal(fixture_corpus):
    S = corpus_space(fixture_corpus, 5)
    assert np.array_equal(S.to_dense(), FIXTURE_H + FIXTURE_H.T)
    assert S.provenance.kind == "global"


def test_word_space_slices_and_clips():
    # target at position 0: slice is clipped to [0, radius]
    corpus = Corpus([Document("d", ("t", "a", "b"))])
    S = word_space(corpus, "t", radius=1, window=5)
    # slice = (t, a): one pair at distance 1, weight 5, symmetric
    expected = np.zeros((3, 3), dtype=np.int64)
    ia, ib, it = 0, 1, 2
    expected[it, ia] = expected[ia, it] = 5
    assert np.array_equal(S.to_dense(), expected)
    assert S.provenance == Provenance("centered", "t", 1)


def test_word_space_overlapping_slices_accumulate():
    # two adjacent occurrences of the target: the shared pair is counted
    # once per occurrence, with no deduplication
    corpus = Corpus([Document("d", ("t", "t"))])
    S = word_space(corpus, "t", radius=1, window=5)
    # each occurrence sees the slice (t, t): pair weight 5, twice, symmetrized
    assert S.to_dense()[0, 0] == 2 * (5 + 5)


def test_word_space_missing_word_is_zero_not_error(fixture_corpus, caplog):
    with caplog.at_level(logging.WARNING, logger="qsem.space"):
        S = word_space(fixture_corpus, "zebra", radius=2, window=5)
    assert S.missing_target
    assert S.nnz == 0
    assert any("zebra" in r.message for r in caplog.records)


def test_word_space_validates_parameters(fixture_corpus):
    with pytest.raises(ParameterError):
        word_space(fixture_corpus, "arms", radius=0, window=5)
    with pytest.raises(ParameterError):
        word_space(fixture_corpus, "arms", radius=2, window=0)


def test_global_space_equals_word_space_sum(fixture_corpus):
    G = global_space(fixture_corpus, radius=3, window=5)
    total = None
    for w in fixture_corpus.vocabulary.words:
        piece = word_space(fixture_corpus, w, 3, 5)
        total = piece if total is None else total + piece
    assert G.equal(total)


def test_space_addition_requires_same_vocabulary(fixture_corpus):
    other = Corpus([Document("o", ("alpha", "beta"))])
    with pytest.raises(ParameterError):
        corpus_space(fixture_corpus, 5) + corpus_space(other, 5)


def test_column_and_word_vector(fixture_corpus):
    S = corpus_space(fixture_corpus, 5)
    vec = word_vector(S, "scandal")
    assert vec.label == "scandal"
    assert vec.weight("arms") == 5
    assert vec.weight("scandal") == 0
    with pytest.raises(UnknownWordError):
        word_vector(S, "zebra")


def test_top_associates_order_and_ties(fixture_corpus):
    S = corpus_space(fixture_corpus, 5)
    top = top_associates(word_vector(S, "scandal"), 3)
    assert top == [("arms", 5), ("the", 4), ("of", 3)]
    # reagan has a 5-5 tie between ignorant and president: vocabulary order
    top = top_associates(word_vector(S, "reagan"), 2)
    assert top == [("ignorant", 5), ("president", 5)]


def test_top_associates_drops_zeros_and_validates(fixture_corpus):
    S = corpus_space(fixture_corpus, 5)
    # president pairs with everything except scandal (6 tokens apart,
    # outside the window) and itself (diagonal stays 0)
    vec = word_vector(S, "president")
    assert len(top_associates(vec, 100)) == 5
    assert "scandal" not in dict(top_associates(vec, 100))
    assert top_associates(vec, 0) == []
    with pytest.raises(ParameterError):
        top_associates(vec, -1)


def test_restricted_drops_zero_rows():
    vocab = Vocabulary(["a", "b", "c"])
    corpus = Corpus([Document("d", ("a", "c"))], vocab)
    S = word_space(corpus, "a", radius=1, window=2)
    sub, index_map = S.restricted()
    assert sub.vocabulary.words == ("a", "c")
    assert index_map.tolist() == [0, 2]
    assert sub.to_dense().tolist() == [[0, 2], [2, 0]]


def test_state_vector_norm_and_unit():
    vocab = Vocabulary(["a", "b"])
    v = StateVector(np.array([3.0, 4.0]), vocab, "v")
    assert v.norm() == 5.0
    u = v.unit()
    assert np.allclose(u.components, [0.6, 0.8])
    zero = StateVector(np.zeros(2), vocab)
    assert zero.is_zero()
    with pytest.raises(NormalizationError):
        zero.unit()


def test_state_vector_length_must_match_vocabulary():
    with pytest.raises(ParameterError):
        StateVector(np.zeros(3), Vocabulary(["a", "b"]))
