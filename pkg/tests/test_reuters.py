import pytest

from qsem.errors import ParameterError, SgmlError
from qsem.ingest import TokenizerConfig
from qsem.reuters import extract_articles, iter_sgml_documents

RAW = TokenizerConfig(stopwords=frozenset())

SAMPLE = b"""<!DOCTYPE lewis SYSTEM "lewis.dtd">
<REUTERS TOPICS="YES" LEWISSPLIT="TRAIN" CGISPLIT="TRAINING-SET" OLDID="5544" NEWID="1">
<DATE>26-FEB-1987 15:01:01.79</DATE>
<TOPICS><D>cocoa</D></TOPICS>
<TEXT>
<TITLE>BAHIA COCOA REVIEW</TITLE>
<DATELINE>    SALVADOR, Feb 26 - </DATELINE><BODY>Showers continued &amp; the Bahia cocoa zone
said &lt;Comissaria Smith&gt;.
 Reuter
&#3;</BODY></TEXT>
</REUTERS>
<REUTERS TOPICS="NO" NEWID="2">
<DATE>26-FEB-1987</DATE>
<TEXT TYPE="BRIEF">
<TITLE>******Blah blah no body element</TITLE>
</TEXT>
</REUTERS>
"""


def test_extract_body_article():
    arts = dict(extract_articles(SAMPLE))
    assert set(arts) == {"1", "2"}
    text = arts["1"]
    assert "Showers continued & the Bahia cocoa zone" in text
    assert "<Comissaria Smith>" in text
    assert "TITLE" not in text  # markup before BODY is not part of it
    assert "BAHIA" not in text


def test_brief_article_falls_back_to_text_element():
    arts = dict(extract_articles(SAMPLE))
    assert "Blah blah no body element" in arts["2"]
    assert "<TITLE>" not in arts["2"]  # tags stripped


def test_article_without_text_is_dropped():
    raw = b'<REUTERS NEWID="9"><DATE>x</DATE></REUTERS>'
    assert list(extract_articles(raw)) == []


def test_missing_newid_gets_positional_id():
    raw = b"<REUTERS><TEXT>hello there</TEXT></REUTERS>"
    (art_id, text), = extract_articles(raw)
    assert art_id == "@0"
    assert "hello there" in text


def test_unclosed_element_reports_byte_offset():
    raw = b"junk<REUTERS NEWID=\"3\"><TEXT>never closed"
    with pytest.raises(SgmlError) as err:
        list(extract_articles(raw))
    assert "byte offset 4" in str(err.value)
    assert err.value.offset == 4


def test_numeric_entities_unescaped():
    raw = b'<REUTERS NEWID="4"><BODY>a&#32;b</BODY></REUTERS>'
    (_, text), = extract_articles(raw)
    assert "a b" in text


def test_latin1_bytes_survive():
    raw = b'<REUTERS NEWID="5"><BODY>caf\xe9 exports</BODY></REUTERS>'
    (_, text), = extract_articles(raw)
    assert "café exports" in text


def test_iter_sgml_documents(tmp_path):
    (tmp_path / "b.sgm").write_bytes(SAMPLE)
    (tmp_path / "a.sgm").write_bytes(
        b'<REUTERS NEWID="7"><BODY>crude oil prices</BODY></REUTERS>'
    )
    docs = list(iter_sgml_documents(tmp_path, RAW))
    assert [d.id for d in docs] == ["7", "1", "2"]  # files in sorted order
    assert docs[0].tokens == ("crude", "oil", "prices")


def test_iter_sgml_documents_empty_dir(tmp_path):
    with pytest.raises(ParameterError):
        list(iter_sgml_documents(tmp_path, RAW))


def test_iter_sgml_documents_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        list(iter_sgml_documents(tmp_path / "nope", RAW))
