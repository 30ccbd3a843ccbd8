import logging
import sys

import leaguerank
from leaguerank import commands
from leaguerank import config as config_lib
from leaguerank import report
from leaguerank.internal import log

logger = logging.getLogger(__name__)


def main():
    log.bootstrap_delayed_logging()
    logger.debug("Starting Leaguerank %s", leaguerank.__version__)

    try:
        root_cmd = commands.RootCommand()
        config_cmd = commands.ConfigCommand()
        root_cmd.add_child("config", config_cmd)

        args = root_cmd.parse(sys.argv[1:])

        overrides = (args.config_overrides or []) + commands.flag_overrides(
            args
        )
        config, config_errors = config_lib.load(args.config_files, overrides)

        log.setup_logging(
            config, args.base_verbosity_level, args.verbosity_level
        )

        # The config command shows errors instead of failing on them.
        if args.command == config_cmd:
            return args.command.run(config, config_errors)

        if not check_config_errors(config_errors):
            return report.EXIT_USAGE

        # Read-only config from here on, please.
        proxied_config = config_lib.Proxy(config)

        try:
            return args.command.run(args, proxied_config)
        except NotImplementedError:
            print(root_cmd.format_help())
            return report.EXIT_USAGE

    except KeyboardInterrupt:
        return report.EXIT_USAGE
    except Exception as ex:
        logger.exception(ex)
        raise


def check_config_errors(errors):
    """Log every config error; returns :class:`True` if there were none."""
    ok = True
    for section in sorted(errors):
        if not errors[section]:
            continue
        logger.error("Found %s configuration errors:", section)
        for field, msg in errors[section].items():
            logger.error("  %s/%s %s", section, field, msg)
        ok = False
    if not ok:
        logger.error("Please fix the configuration errors, exiting...")
    return ok


if __name__ == "__main__":
    sys.exit(main())
