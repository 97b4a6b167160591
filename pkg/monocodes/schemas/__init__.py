from monocodes.schemas.channel import ChannelTable
from monocodes.schemas.code import CodeDescription

__all__ = ["ChannelTable", "CodeDescription"]
