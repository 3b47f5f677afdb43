from typing import Callable, TypeVar, TypeGuard, Generic, Iterable

from .errors import FlagPhaseError, exit_code_for, EXIT_OK

T = TypeVar('T')
U = TypeVar('U')

# internal class used to allow representing Result[None]
class FakeNone:
    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "<missing>"

class Result(Generic[T]):
    _value: "T | FakeNone"
    _error: "BaseException | FakeNone"

    def __init__(self, value: "T | FakeNone", error: "BaseException | FakeNone"):
        self._value = value
        self._error = error

    def __repr__(self) -> str:
        if isinstance(self._error, BaseException):
            return f"Err({self._error!r})"
        return f"Ok({self._value!r})"

    def unwrap(self) -> T:
        if isinstance(self._error, BaseException):
            raise self._error
        if isinstance(self._value, FakeNone):
            raise FlagPhaseError("unwrap on a result that holds neither a value nor an error")
        return self._value

    def unwrap_err(self) -> BaseException:
        if isinstance(self._error, FakeNone):
            raise FlagPhaseError("Result is ok")
        return self._error

    def unwrap_or(self, default: T) -> T:
        if isinstance(self._error, BaseException) or isinstance(self._value, FakeNone):
            return default
        return self._value

    def map_ok(self, func: Callable[[T], U]) -> "Result[U]":
        if isinstance(self._error, BaseException) or isinstance(self._value, FakeNone):
            return Result(FakeNone(), self._error)
        return Result(func(self._value), self._error)

    def exit_code(self) -> int:
        """Process exit status for this result: 0 when ok, the error's code otherwise."""
        if isinstance(self._error, BaseException):
            return exit_code_for(self._error)
        return EXIT_OK

    @staticmethod
    def resultify(func: Callable[..., T]) -> "Callable[..., Result[T]]":
        def wrapper(*args, **kwargs) -> Result[T]:
            try:
                return Result(func(*args, **kwargs), FakeNone())
            except Exception as e:
                return Result(FakeNone(), e)
        wrapper.__name__ = getattr(func, "__name__", "wrapper")
        wrapper.__doc__ = getattr(func, "__doc__", None)
        return wrapper

# External TypeGuard functions that actually work
def is_ok(res: Result[T]) -> TypeGuard[Result[T]]:
    return isinstance(res._error, FakeNone)

def is_err(res: Result[T]) -> TypeGuard[Result[T]]:
    return isinstance(res._error, BaseException)

def Ok(value: T) -> Result[T]:
    return Result(value, FakeNone())

def Err(error: BaseException) -> Result[T]:
    return Result(FakeNone(), error)

def collect(results: Iterable[Result[T]]) -> Result[list[T]]:
    """First error wins; otherwise the list of values in order."""
    values = []
    for res in results:
        if is_err(res):
            return Err(res.unwrap_err())
        values.append(res.unwrap())
    return Ok(values)
