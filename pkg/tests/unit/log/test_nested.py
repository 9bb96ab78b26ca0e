from layerscatter.log import IndentationLog, Log


class TestIndentationLog:
    def test_indentation(self, tmp_path):
        path = tmp_path/"run.log"
        with IndentationLog(path, indentation_token="--") as log:
            Log.info("outer")
            with log.indentation():
                Log.info("inner")
                with log.indentation():
                    Log.info("innermost")
            Log.info("back")

        lines = {line.split(" | ")[-1] for line in path.read_text().splitlines()}
        assert {"outer", "--inner", "----innermost", "back"} <= lines

    def test_no_indentation(self, tmp_path):
        path = tmp_path/"run.log"
        with IndentationLog(path) as log:
            with log.indentation(), log.no_indentation():
                Log.info("flat")
            assert log.indent and log.indentation_level == 0

        assert any(line.endswith(" | flat") for line in path.read_text().splitlines())
