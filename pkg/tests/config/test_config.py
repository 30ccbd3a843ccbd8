import unittest
from unittest import mock

import pytest

from leaguerank import config
from leaguerank.models import FUNDING, WeightScheme
from tests import path_to_data_dir


class LoadConfigTest(unittest.TestCase):
    def test_load_nothing(self):
        assert {} == config._load([], "", [])

    def test_load_missing_file(self):
        file0 = path_to_data_dir("file0.conf")
        result = config._load([file0], "", [])
        assert {} == result

    @mock.patch("os.access")
    def test_load_nonreadable_file(self, access_mock):
        access_mock.return_value = False
        file1 = path_to_data_dir("file1.conf")
        result = config._load([file1], "", [])
        assert {} == result

    def test_load_default(self):
        default = "[report]\nseed = 3"
        expected = {"report": {"seed": "3"}}
        result = config._load([], default, [])
        assert expected == result

    def test_load_ignore_inline_comment(self):
        default = "[report]\nseed = 3 ; my_comment"
        expected = {"report": {"seed": "3"}}
        result = config._load([], default, [])
        assert expected == result

    def test_load_single_override(self):
        override = ("report", "seed", "9")
        expected = {"report": {"seed": "9"}}
        result = config._load([], "", [override])
        assert expected == result

    def test_override_wins_over_default(self):
        default = "[report]\nseed = 3\nlevel = 0.95"
        override = ("report", "seed", "9")
        expected = {"report": {"seed": "9", "level": "0.95"}}
        result = config._load([], default, [override])
        assert expected == result

    def test_load_files(self):
        file1 = path_to_data_dir("file1.conf")
        file2 = path_to_data_dir("file2.conf")
        expected = {
            "report": {"iterations": "500"},
            "simulation": {"workers": "2"},
        }
        result = config._load([file1, file2], "", [])
        assert expected == result

    def test_load_directory_in_name_order(self):
        directory = path_to_data_dir("conf.d")
        expected = {"report": {"seed": "8", "level": "0.9"}}
        result = config._load([directory], "", [])
        assert expected == result

    def test_load_file_is_given_resolved_path(self):
        with mock.patch.object(config, "_load_file") as load_file_mock:
            config._load([path_to_data_dir("file1.conf")], "", [])

        load_file_mock.assert_called_once_with(
            mock.ANY, path_to_data_dir("file1.conf")
        )


class ValidateTest(unittest.TestCase):
    def setUp(self):  # noqa: N802
        self.schema = config.ConfigSchema("foo")
        self.schema["bar"] = config.ConfigValue()

    def test_empty_config_no_schemas(self):
        conf, errors = config._validate({}, [])
        assert {} == conf
        assert {} == errors

    def test_config_no_schemas(self):
        raw_config = {"foo": {"bar": "baz"}}
        conf, errors = config._validate(raw_config, [])
        assert {} == conf
        assert {} == errors

    def test_empty_config_single_schema(self):
        conf, errors = config._validate({}, [self.schema])
        assert {"foo": {"bar": None}} == conf
        assert {"foo": {"bar": "config key not found."}} == errors

    def test_config_single_schema(self):
        raw_config = {"foo": {"bar": "baz"}}
        conf, errors = config._validate(raw_config, [self.schema])
        assert {"foo": {"bar": "baz"}} == conf
        assert {} == errors

    def test_config_single_schema_config_error(self):
        raw_config = {"foo": {"bar": "baz"}}
        self.schema["bar"] = mock.Mock()
        self.schema["bar"].deserialize.side_effect = ValueError("bad")
        conf, errors = config._validate(raw_config, [self.schema])
        assert {"foo": {"bar": "bad"}} == errors
        assert {"foo": {"bar": None}} == conf


class LoadTest(unittest.TestCase):
    def test_defaults_are_valid(self):
        conf, errors = config.load([])

        assert {} == errors
        assert conf["report"]["weights"] is FUNDING
        assert conf["report"]["iterations"] == 10000
        assert conf["report"]["seed"] == 0
        assert conf["report"]["model"] == "true-score"
        assert conf["report"]["tie_policy"] == "midrank"
        assert conf["report"]["level"] == 0.95
        assert conf["report"]["baseline"] == "fte-weighted"
        assert conf["report"]["input"] is None
        assert conf["simulation"]["workers"] == 1

    def test_file_then_override(self):
        conf, errors = config.load(
            [path_to_data_dir("file1.conf")],
            [("report", "weights", "9,3,1,0,0")],
        )

        assert {} == errors
        assert conf["report"]["iterations"] == 500
        assert conf["report"]["weights"] == WeightScheme(
            name="9,3,1,0,0", weights=[9, 3, 1, 0, 0]
        )

    def test_invalid_override_is_reported(self):
        conf, errors = config.load([], [("report", "model", "bootstrap")])

        assert "model" in errors["report"]
        assert conf["report"]["model"] is None

    def test_misspelled_key_gets_suggestion(self):
        _, errors = config.load([], [("report", "iteratoins", "5")])

        assert errors["report"]["iteratoins"] == (
            "unknown config key. Did you mean 'iterations'?"
        )

    def test_unknown_section_is_ignored(self):
        conf, errors = config.load([], [("audio", "mixer", "software")])

        assert "audio" not in conf
        assert "audio" not in errors


class FormatTest(unittest.TestCase):
    def test_format_defaults(self):
        conf, _ = config.load([])

        result = config.format(conf)

        assert "[report]\ninput =\nout_dir = ." in result
        assert "weights = funding" in result
        assert "level = 0.95" in result
        assert "[loglevels]\nmatplotlib = warning\npykka = info" in result

    def test_format_with_comments(self):
        conf, errors = config.load([], [("report", "seed", "-1")])

        result = config.format(conf, errors)

        assert "seed =  ; -1 must be larger than 0." in result


class ProxyTest(unittest.TestCase):
    def test_nested_sections_are_read_only(self):
        proxy = config.Proxy({"report": {"seed": 1}})

        assert proxy["report"]["seed"] == 1
        assert len(proxy) == 1
        assert list(proxy) == ["report"]
        with pytest.raises(TypeError):
            proxy["report"]["seed"] = 2
