# -*- coding: utf-8 -*-

import sys


# symbols used in catalog and report lines with ASCII stand-ins
ASCII_FALLBACKS = {
    '—': '-',
    '−': '-',
    'φ': 'phi',
    'ξ': 'xi',
    'η': 'eta',
    'α': 'alpha',
    'β': 'beta',
    'θ': 'theta',
    'λ': 'lambda',
    'c̄': 'c_bar',
    'ḡ': 'g_bar',
    'g̃': 'g_tilde',
    '²': '^2',
}


def to_ascii(s):
    for symbol, fallback in ASCII_FALLBACKS.items():
        s = s.replace(symbol, fallback)
    return s.encode('ascii', 'replace').decode('ascii')


def safe_print(s):
    """Prints s, replacing symbols the console encoding cannot show"""
    try:
        print(s)
    except UnicodeEncodeError:
        encoding = sys.stdout.encoding or 'ascii'
        print(to_ascii(s).encode(encoding, 'replace').decode(encoding))
