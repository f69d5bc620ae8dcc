import os
import tempfile

# run logs of the test session stay out of the working tree
os.environ.setdefault("TABKIT_LOG_DIR", tempfile.mkdtemp(prefix="tabkit-logs-"))
