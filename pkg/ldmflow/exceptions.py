class HorizonExhaustedError(RuntimeError):
    """Raised when an exit time is requested beyond the loaded horizon of an arc that still holds vehicles."""
