import pytest

from recurlab.descriptors import tokenize
from recurlab.errors import DescriptorError


def test_keyed_and_positional():
    d = tokenize("moebius:a=2,b=-1,c=3,d=1")
    assert d.name == "moebius"
    assert d.ints(("a", "b", "c", "d"), {"l": 1}) == {"a": 2, "b": -1, "c": 3, "d": 1, "l": 1}
    assert tokenize("fourforms:1,2,3,5").int_list() == [1, 2, 3, 5]
    assert tokenize("  rado3 ").items == []


@pytest.mark.parametrize("text,pos", [
    ("padic:p=2,v=3", 10),
    ("linear:a=1,,b=2", 11),
    ("linear:a=x,b=2", 9),
    ("9lives", 0),
])
def test_error_positions(text, pos):
    with pytest.raises(DescriptorError) as e:
        tokenize(text).ints(("p", "u") if text.startswith("padic") else ("a", "b"))
    assert e.value.position == pos


def test_duplicate_and_missing_keys():
    with pytest.raises(DescriptorError, match="duplicate"):
        tokenize("linear:a=1,a=2").ints(("a",))
    with pytest.raises(DescriptorError, match="missing"):
        tokenize("linear:a=1").ints(("a", "b"))
    with pytest.raises(DescriptorError, match="key=value"):
        tokenize("linear:1,2").ints(("a", "b"))
    with pytest.raises(DescriptorError):
        tokenize(5)
