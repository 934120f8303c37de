pytest_plugins = ["pykern.pytest_plugin"]
