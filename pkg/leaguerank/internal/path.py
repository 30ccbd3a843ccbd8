import logging
import os
import pathlib

logger = logging.getLogger(__name__)


def get_or_create_dir(dir_path):
    dir_path = expand_path(dir_path)
    if dir_path.is_file():
        raise OSError(
            f"A file with the same name as the desired dir, "
            f"{dir_path!r}, already exists."
        )
    elif not dir_path.is_dir():
        logger.info(f"Creating dir {dir_path.as_uri()}")
        dir_path.mkdir(mode=0o755, parents=True)
    if not os.access(str(dir_path), os.W_OK):
        raise OSError(f"Directory {dir_path.as_uri()} is not writable")
    return dir_path


def expand_path(path):
    if isinstance(path, bytes):
        path = path.decode(errors="surrogateescape")
    path = os.path.expandvars(str(pathlib.Path(path)))
    if "$" in path:
        return None

    return pathlib.Path(path).expanduser().resolve()


def user_config_dir():
    base = os.environ.get("XDG_CONFIG_HOME") or "~/.config"
    return expand_path(base) / "leaguerank"
