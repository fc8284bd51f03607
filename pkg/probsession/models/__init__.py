from .document import GLOBAL_TYPE, PROCESS, ProtocolDocument
from .workspace import Workspace

__all__ = ['GLOBAL_TYPE', 'PROCESS', 'ProtocolDocument', 'Workspace']
