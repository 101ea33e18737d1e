from .factory import create_router_params, load_device

__all__ = ["create_router_params", "load_device"]
__version__ = "1.0.0"
