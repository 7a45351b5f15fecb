"""Utility helpers, constants, validators and schemas."""
