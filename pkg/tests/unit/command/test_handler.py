import pytest

from layerscatter.command import ArgType
from layerscatter.command.handler import CommandHandler


class TestCommandHandler:
    def test_shortform_assignment(self):
        handler = CommandHandler(name="root")
        first, second, third = ArgType.Float(name="omega"), ArgType.Float(name="out"), ArgType.Float(name="help_me")
        for argument in (first, second, third):
            handler.add_argument(argument)

        assert (first.shortform, second.shortform) == ("o", "u")
        assert third.shortform == "e"

    def test_positional_has_no_shortform(self):
        handler = CommandHandler(name="root")
        handler.add_argument(argument := ArgType.Path(name="medium", positional=True))
        assert argument.shortform is None

    def test_duplicate_name(self):
        handler = CommandHandler(name="root")
        handler.add_argument(ArgType.Float(name="cutoff"))
        with pytest.raises(ValueError):
            handler.add_argument(ArgType.Float(name="cutoff"))

    def test_invalid_name(self):
        with pytest.raises(ValueError):
            CommandHandler(name="root").register_name("not-valid")

    def test_namespace_is_shared_down_the_tree(self):
        root, child, grandchild = CommandHandler(name="root"), CommandHandler(name="child"), CommandHandler(name="grandchild")
        child.add_subhandler(grandchild)
        root.add_subhandler(child)

        root.shared_namespace["key"] = "value"
        assert grandchild.shared_namespace["key"] == "value"
        assert grandchild.parent is child

    def test_summary(self):
        assert CommandHandler(name="root", desc="First line.\nSecond line.").summary == "First line."
