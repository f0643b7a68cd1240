"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import copy
import logging
import sys
import time

from dickemqs.common.errors import DickeError, ValidationError
from dickemqs.common.flags import flags
from dickemqs.common.registry import registry
from dickemqs.common.utils import build_config, setup_imports, setup_logging


class Runner:
    def __init__(self):
        self.config = None

    def __call__(self, config):
        self.config = copy.deepcopy(config)
        task_cls = registry.get_task_class(config["mode"])
        self.task = task_cls(self.config)
        start_time = time.time()
        written = self.task.run()
        logging.info(
            f"Total time taken: {time.time() - start_time:.2f}s, "
            f"wrote {len(written)} file(s)"
        )
        return written


def main(argv=None):
    setup_logging()
    setup_imports()

    parser = flags.get_parser()
    args, override_args = parser.parse_known_args(argv)
    if args.debug:
        setup_logging(logging.DEBUG)

    try:
        task_cls = registry.get_task_class(args.mode)
        if task_cls is None:
            raise ValidationError(
                f"Unknown mode {args.mode!r}; registered: "
                f"{registry.task_names()}",
                field="mode",
            )
        config = build_config(
            args, override_args, defaults=task_cls.default_config
        )
        Runner()(config)
    except DickeError as e:
        logging.error(f"{type(e).__name__}: {e}")
        if args.debug:
            logging.exception("Traceback")
        return e.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
