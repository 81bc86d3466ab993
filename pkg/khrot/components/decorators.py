"""
..  hidden-code-block:: text
    :label: View Licence Agreement <br>

    khrot - Khovanov homology with rotation numbers

    The MIT License (MIT)
    Copyright (C) 2026  khrot contributors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software and associated documentation files (the "Software"), to deal
    in the Software without restriction, including without limitation the rights
    to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
    copies of the Software, and to permit persons to whom the Software is
    furnished to do so, subject to the following conditions:

    The above copyright notice and this permission notice shall be included in all
    copies or substantial portions of the Software.

    THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
    IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
    FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
    AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
    LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
    OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
    SOFTWARE.
"""

__all__ = ['logging_wrapper']

import logging

from functools import wraps


logger = logging.getLogger()

MAX_ARGUMENT_LENGTH = 120


def _short(value) -> str:
    text = str(value)
    if len(text) > MAX_ARGUMENT_LENGTH:
        return f"{text[:MAX_ARGUMENT_LENGTH]}..."
    return text


def logging_wrapper(level: int = None):
    """
    Log the qualified name of the decorated callable with its arguments before running it,
    and the type of the result after.
    Long argument representations (whole complexes, PD codes of big links) are truncated.

    Usage example:

    .. code-block:: python

        @logging_wrapper(logging.INFO)
        def kh(pd, close=True): pass

    Running kh(pd, close=False) logs: "Running kh with pd=PD[X(1,4,2,3)], close=False"

    :param level: logging level, E.g. logging.INFO
    """

    if not level:
        level = logging.INFO

    def decorator(method):
        @wraps(method)
        def wrapper(*args, **kwargs):
            if logger.isEnabledFor(level):
                var_names = method.__code__.co_varnames[:method.__code__.co_argcount]
                parts = []
                for i, arg in enumerate(args):
                    if i < len(var_names):
                        if var_names[i] != 'self':
                            parts.append(f"{var_names[i]}={_short(arg)}")
                    else:
                        parts.append(_short(arg))
                parts.extend(f"{k}={_short(v)}" for k, v in kwargs.items())

                message = f"Running {method.__qualname__}"
                if parts:
                    message = f"{message} with {', '.join(parts)}"
                logger.log(level, message)

            result = method(*args, **kwargs)
            logger.log(level, f"Finished {method.__qualname__} returning {type(result).__name__}")
            return result
        return wrapper
    return decorator
