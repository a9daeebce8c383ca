"""Emoji-aware tokenization, segmentation and evaluation for social-media text."""
from .registry import CodePointClass, Registry, default_registry, load_registry, plane_of
from .segmenter import EmojiSequence, SequenceKind, segment_emoji_run
from .tokenizer import NormalizeOptions, Token, TokenKind, normalize_tokens, tokenize

__version__ = "0.1.0"
