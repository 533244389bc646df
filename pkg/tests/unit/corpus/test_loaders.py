"""
Corpus Loader Tests

The code is licensed under the MIT license.
"""

import pytest
from textpgm.core.exceptions import (
    DuplicateDocument,
    EmptyDataset,
    MalformedRow,
    MissingColumn,
    ParseError,
    UnsupportedArff,
)
from textpgm.corpus.arff import load_arff
from textpgm.corpus.delimited import load_csv


def _write(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    return str(path)


def test_load_csv_labels_in_first_appearance_order(tmp_path):
    """
    Three rows pos, neg, pos give two labels in appearance order
    """

    path = _write(
        tmp_path, "data.csv", "text,label\ngood film,pos\nawful,neg\n\"fine, really\",pos\n"
    )
    data = load_csv(path)

    assert len(data) == 3
    assert data.labels == ("pos", "neg")
    assert data.texts() == ["good film", "awful", "fine, really"]
    assert data.ids() == ["1", "2", "3"]


def test_load_csv_header_only(tmp_path):
    """
    A header without rows is an empty dataset
    """

    with pytest.raises(EmptyDataset):
        load_csv(_write(tmp_path, "empty.csv", "text,label\n"))


def test_load_csv_missing_label_cell(tmp_path):
    """
    A row without a label cell is malformed and names its line
    """

    path = _write(tmp_path, "short.csv", "text,label\ngood,pos\nno label here\n")

    with pytest.raises(MalformedRow) as error:
        load_csv(path)

    assert error.value.line == 3


def test_load_csv_missing_column(tmp_path):
    """
    Requesting an absent column fails
    """

    with pytest.raises(MissingColumn) as error:
        load_csv(_write(tmp_path, "data.csv", "body,label\nx,pos\n"))

    assert error.value.column == "text"


def test_load_csv_id_column_and_delimiter(tmp_path):
    """
    Ids come from the id column; other delimiters are accepted
    """

    path = _write(tmp_path, "data.tsv", "doc\ttext\tlabel\na7\tnice\tpos\nb2\tbad\tneg\n")
    data = load_csv(path, delimiter="\t", id_column="doc")

    assert data.ids() == ["a7", "b2"]


def test_load_csv_duplicate_ids(tmp_path):
    """
    Ids must be unique
    """

    path = _write(tmp_path, "data.csv", "id,text,label\n1,a,pos\n1,b,neg\n")

    with pytest.raises(DuplicateDocument):
        load_csv(path, id_column="id")


ARFF = """% movie reviews
@relation reviews

@attribute text string
@attribute class {neg,pos}

@data
'a fine, funny film',pos
"dull",neg
"""


def test_load_arff_nominal_order(tmp_path):
    """
    Labels follow the nominal declaration, quoted commas stay in one field
    """

    data = load_arff(_write(tmp_path, "reviews.arff", ARFF))

    assert data.labels == ("neg", "pos")
    assert len(data) == 2
    assert data[0].text == "a fine, funny film"
    assert data[0].label == "pos"


def test_load_arff_without_class(tmp_path):
    """
    A relation without a nominal attribute is unsupported
    """

    content = "@relation r\n@attribute text string\n@data\n'x'\n"

    with pytest.raises(UnsupportedArff):
        load_arff(_write(tmp_path, "noclass.arff", content))


def test_load_arff_numeric_attribute(tmp_path):
    """
    Numeric attributes are outside the supported shape
    """

    content = "@relation r\n@attribute x numeric\n@attribute class {a,b}\n@data\n1,a\n"

    with pytest.raises(UnsupportedArff):
        load_arff(_write(tmp_path, "numeric.arff", content))


def test_load_arff_wrong_field_count(tmp_path):
    """
    Rows must have one field per attribute
    """

    content = ARFF + "'one','two',pos\n"

    with pytest.raises(ParseError) as error:
        load_arff(_write(tmp_path, "bad.arff", content))

    assert error.value.line == 10
