import os
import pathlib
import shutil
import tempfile
import unittest
from unittest import mock

import pytest

from leaguerank.internal import path


class GetOrCreateDirTest(unittest.TestCase):
    def setUp(self):  # noqa: N802
        self.parent = pathlib.Path(tempfile.mkdtemp())

    def tearDown(self):  # noqa: N802
        if self.parent.is_dir():
            shutil.rmtree(str(self.parent))

    def test_creating_dir(self):
        dir_path = self.parent / "test"
        assert not dir_path.exists()

        created = path.get_or_create_dir(str(dir_path))

        assert dir_path.is_dir()
        assert created == dir_path.resolve()

    def test_creating_nested_dirs(self):
        level3_dir = self.parent / "test" / "test"

        created = path.get_or_create_dir(str(level3_dir))

        assert (self.parent / "test").is_dir()
        assert created == level3_dir.resolve()

    def test_creating_existing_dir(self):
        created = path.get_or_create_dir(str(self.parent))

        assert created == self.parent.resolve()

    def test_create_dir_with_name_of_existing_file_throws_oserror(self):
        conflicting_file = self.parent / "test"
        conflicting_file.touch()

        with pytest.raises(OSError):
            path.get_or_create_dir(str(conflicting_file))

    def test_unwritable_dir_throws_oserror(self):
        with mock.patch("os.access", return_value=False):
            with pytest.raises(OSError):
                path.get_or_create_dir(str(self.parent))


class ExpandPathTest(unittest.TestCase):
    def test_empty_path(self):
        assert path.expand_path("") == pathlib.Path(".").resolve()

    def test_absolute_path(self):
        assert path.expand_path("/tmp/foo") == pathlib.Path("/tmp/foo").resolve()

    def test_home_dir_expansion(self):
        expected = pathlib.Path("~/foo").expanduser().resolve()

        assert path.expand_path("~/foo") == expected

    def test_abspath(self):
        assert path.expand_path("./foo") == pathlib.Path("foo").resolve()

    def test_env_var_expansion(self):
        with mock.patch.dict(os.environ, {"LEAGUERANK_TEST": "/tmp/league"}):
            result = path.expand_path("$LEAGUERANK_TEST/out")

        assert result == pathlib.Path("/tmp/league/out").resolve()

    def test_unknown_env_var_gives_none(self):
        assert path.expand_path("/tmp/$LEAGUERANK_NO_SUCH_VAR/foo") is None


class UserConfigDirTest(unittest.TestCase):
    def test_uses_xdg_config_home(self):
        with mock.patch.dict(os.environ, {"XDG_CONFIG_HOME": "/tmp/xdg"}):
            result = path.user_config_dir()

        assert result == pathlib.Path("/tmp/xdg").resolve() / "leaguerank"

    def test_defaults_to_dot_config(self):
        env = {k: v for k, v in os.environ.items() if k != "XDG_CONFIG_HOME"}
        with mock.patch.dict(os.environ, env, clear=True):
            result = path.user_config_dir()

        assert result == (
            pathlib.Path("~/.config").expanduser().resolve() / "leaguerank"
        )
