import math
from fractions import Fraction


def lcm(a, b):
    return a * b // math.gcd(a, b)


def parse_number(text):
    """
    Reads '1/4', '0.3' or '2' as an exact Fraction, so that decimal
    discount factors given on the command line stay rational.
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError("Not a rational number: {!r}".format(text))


def format_number(value, digits=10):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "{} (~{})".format(value, round(float(value), digits))
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return "{:.{}g}".format(value, digits)
    return str(value)


def json_number(value):
    """
    Fractions become their exact string, floats stay floats.
    """
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def check_discount_factor(delta):
    if isinstance(delta, bool) or not isinstance(delta, (Fraction, float, int)):
        raise ValueError("Discount factor must be a number, got {!r}".format(delta))
    if not 0 < delta < 1:
        raise ValueError("Discount factor must lie strictly between 0 and 1, got {}".format(delta))
    return delta
