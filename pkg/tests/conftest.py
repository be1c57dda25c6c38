"""Shared helpers: text constructors and classic adversarial word families."""

from sparseruns import opaque_text_from_bytes, text_from_bytes


def make_text(data, opaque=False):
    """Text over raw bytes, optionally wrapped in comparison-only symbols."""
    return opaque_text_from_bytes(data) if opaque else text_from_bytes(data)


def fibonacci_word(n):
    """First n bytes of the infinite Fibonacci word over {a, b}."""
    a, b = b"a", b"ab"
    while len(b) < n:
        a, b = b, b + a
    return b[:n]


def thue_morse(n):
    """First n bytes of the Thue-Morse word over {a, b}."""
    out = bytearray()
    i = 0
    while len(out) < n:
        out.append(ord("a") + bin(i).count("1") % 2)
        i += 1
    return bytes(out)


def adversarial_family(n):
    """The stress inputs of a given length: a^n, (ab)*, Fibonacci, Thue-Morse."""
    return [
        b"a" * n,
        (b"ab" * ((n + 1) // 2))[:n],
        fibonacci_word(n),
        thue_morse(n),
    ]
