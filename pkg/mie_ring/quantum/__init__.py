__all__ = ["specfun", "model", "spectrum", "fisher", "oracle"]
