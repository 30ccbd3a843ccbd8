"""Layered INI configuration.

Values are read from the builtin ``default.conf``, then from the files
given with ``--config``, then from command line overrides, and every value
is validated by the schema of its section.
"""

import configparser
import logging
import os
import pathlib
from collections.abc import Mapping

from leaguerank.config.schemas import ConfigSchema, MapConfigSchema
from leaguerank.config.types import (
    ConfigValue,
    Float,
    Integer,
    LogLevel,
    Path,
    Probability,
    Seed,
    String,
    Weights,
)
from leaguerank.internal import path
from leaguerank.models import BaselineMode, Model, TiePolicy

__all__ = [
    "ConfigSchema",
    "ConfigValue",
    "Float",
    "MapConfigSchema",
    "Proxy",
    "format",
    "load",
]

logger = logging.getLogger(__name__)

_logging_schema = ConfigSchema("logging")
_logging_schema["verbosity"] = Integer(minimum=-1, maximum=4)
_logging_schema["format"] = String()
_logging_schema["config_file"] = Path(optional=True)

_loglevels_schema = MapConfigSchema("loglevels", LogLevel())

_report_schema = ConfigSchema("report")
_report_schema["input"] = Path(optional=True)
_report_schema["out_dir"] = Path()
_report_schema["weights"] = Weights()
_report_schema["iterations"] = Integer(minimum=1)
_report_schema["seed"] = Seed()
_report_schema["model"] = String(choices=[m.value for m in Model])
_report_schema["tie_policy"] = String(choices=[t.value for t in TiePolicy])
_report_schema["level"] = Probability()
_report_schema["baseline"] = String(choices=[b.value for b in BaselineMode])

_simulation_schema = ConfigSchema("simulation")
_simulation_schema["workers"] = Integer(minimum=1)
_simulation_schema["shard_size"] = Integer(minimum=1)

_schemas = [
    _logging_schema,
    _loglevels_schema,
    _report_schema,
    _simulation_schema,
]


def read(config_file):
    return pathlib.Path(config_file).read_text(errors="surrogateescape")


def load(files, overrides=None):
    """Load and validate the configuration.

    :param files: config files or directories of ``*.conf`` files, later
        ones taking precedence
    :param overrides: ``(section, key, value)`` triples applied last
    :returns: ``(config, errors)``, both dicts keyed by section
    """
    default = read(pathlib.Path(__file__).parent / "default.conf")
    raw_config = _load(files, default, overrides or [])
    return _validate(raw_config, _schemas)


def format(config, comments=None, display=True):
    """Render ``config`` as INI text, with ``comments`` after values."""
    return _format(config, comments or {}, _schemas, display)


def _load(files, default, overrides):
    parser = configparser.RawConfigParser(inline_comment_prefixes=(";",))

    logger.debug("Loading config from builtin defaults")
    parser.read_string(default)

    for f in files:
        f = path.expand_path(f)
        if f is None:
            continue
        if f.is_dir():
            for g in sorted(f.iterdir()):
                if g.is_file() and g.suffix == ".conf":
                    _load_file(parser, g.resolve())
        else:
            _load_file(parser, f.resolve())

    raw_config = {
        section: dict(parser.items(section)) for section in parser.sections()
    }

    if overrides:
        logger.debug("Loading config from command line options")
    for section, key, value in overrides:
        raw_config.setdefault(section, {})[key] = value

    return raw_config


def _load_file(parser, file_path):
    if not file_path.exists():
        logger.debug("Config file %s does not exist; skipping", file_path)
        return
    if not os.access(str(file_path), os.R_OK):
        logger.warning(
            "Loading config from %s failed; read permission missing", file_path
        )
        return

    try:
        logger.info("Loading config from %s", file_path)
        with file_path.open("r") as fh:
            parser.read_file(fh)
    except configparser.MissingSectionHeaderError:
        logger.warning(
            "Loading config from %s failed; "
            "it does not have a config section",
            file_path,
        )
    except configparser.ParsingError as e:
        linenos = ", ".join(str(lineno) for lineno, line in e.errors)
        logger.warning(
            "Config file %s has errors; line %s has been ignored",
            file_path,
            linenos,
        )


def _validate(raw_config, schemas):
    config = {}
    errors = {}
    sections = set(raw_config)
    for schema in schemas:
        sections.discard(schema.name)
        result, error = schema.deserialize(raw_config.get(schema.name, {}))
        if error:
            errors[schema.name] = error
        if result:
            config[schema.name] = result

    for section in sorted(sections):
        logger.warning("Ignoring unknown config section %r", section)

    return config, errors


def _format(config, comments, schemas, display):
    output = []
    for schema in schemas:
        serialized = schema.serialize(
            config.get(schema.name, {}), display=display
        )
        if not serialized:
            continue
        output.append(f"[{schema.name}]")
        for key, value in serialized.items():
            line = f"{key} ="
            if value:
                line += " " + value
            comment = comments.get(schema.name, {}).get(key, "")
            if comment:
                line += "  ; " + comment.capitalize()
            output.append(line)
        output.append("")
    return "\n".join(output).strip()


class Proxy(Mapping):
    """Read-only view of a validated config, nested sections included."""

    def __init__(self, data):
        self._data = data

    def __getitem__(self, key):
        item = self._data.__getitem__(key)
        if isinstance(item, dict):
            return Proxy(item)
        return item

    def __iter__(self):
        return self._data.__iter__()

    def __len__(self):
        return self._data.__len__()

    def __repr__(self):
        return f"Proxy({self._data!r})"
