import logging
import os

from flask import Flask
from flask.cli import FlaskGroup
from flask.logging import default_handler

from koszulgraphs.commands import UsageFailure, koszul_bp
from koszulgraphs.limits import DEFAULT_DEGREE_BOUND, MAX_DEGREE_BOUND

# Settings that may come from the environment (or a .env file)
ENV_KEYS = ("KOSZUL_DEGREE_BOUND", "KOSZUL_WORKERS", "KOSZUL_LOG_LEVEL")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def create_app(test_config=None):
    app = Flask(__name__)

    # Basic config
    app.config["KOSZUL_DEGREE_BOUND"] = DEFAULT_DEGREE_BOUND
    app.config["KOSZUL_MAX_DEGREE"] = MAX_DEGREE_BOUND
    app.config["KOSZUL_WORKERS"] = os.cpu_count() or 1
    app.config["KOSZUL_LOG_LEVEL"] = "WARNING"

    # Environment overrides; the commands validate the numeric values
    for key in ENV_KEYS:
        if os.environ.get(key):
            app.config[key] = os.environ[key]

    if test_config:
        app.config.update(test_config)

    # Library modules log under "koszulgraphs"; route them through Flask's handler
    level = str(app.config["KOSZUL_LOG_LEVEL"]).upper()
    if level not in LOG_LEVELS:
        raise UsageFailure(
            f"KOSZUL_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {level!r}."
        )
    app.logger.setLevel(level)
    library_logger = logging.getLogger("koszulgraphs")
    library_logger.setLevel(level)
    if default_handler not in library_logger.handlers:
        library_logger.addHandler(default_handler)

    # Blueprints
    app.register_blueprint(koszul_bp)

    return app


# This is what `python app.py ...` will use; `flask --app app` finds create_app itself
cli = FlaskGroup(create_app=create_app)

if __name__ == "__main__":
    cli()
