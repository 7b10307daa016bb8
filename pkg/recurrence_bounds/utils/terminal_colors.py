RED = "\x1b[37;41m"
GREEN = "\x1b[37;42m"
YELLOW = "\x1b[37;43m"

BOLD = "\x1b[1m"
END = "\x1b[0m"


def highlight(message: str, color: str = RED) -> str:
    return f"{color}{BOLD}{message}{END}"
