"""ANSI escape codes for report and catalog output"""

CSI = '\033['


def code_to_chars(code):
    return CSI + str(code) + 'm'


class AnsiCodes(object):
    def __init__(self):
        for name in dir(self):
            if not name.startswith('_'):
                setattr(self, name, code_to_chars(getattr(self, name)))


class AnsiFore(AnsiCodes):
    GREEN = 32
    BLUE = 34
    FAIL = 31
    WARNING = 33
    INFO = 90


class AnsiStyle(AnsiCodes):
    BOLD = 1
    RESET_ALL = 0


Fore = AnsiFore()
Style = AnsiStyle()

# check status -> colour of its report line
STATUS_CODES = {
    'pass': Fore.GREEN,
    'fail': Fore.FAIL,
    'skip': Fore.WARNING,
}


def colored(text, *codes):
    """text wrapped in the given codes and a reset"""
    return '{}{}{}'.format(''.join(codes), text, Style.RESET_ALL)


def status_colored(status, text):
    """text in the colour of a check status; unknown statuses stay plain"""
    code = STATUS_CODES.get(status)
    return colored(text, code) if code else text
