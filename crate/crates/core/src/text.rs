//! Unicode normalization helpers. Every string that crosses a module
//! boundary goes through [`nfc`] so that visually identical Indic text with
//! different codepoint sequences compares equal.

use std::borrow::Cow;

use unicode_normalization::{is_nfc_quick, IsNormalized, UnicodeNormalization};

/// Returns `s` in Unicode NFC, borrowing when it already is.
pub fn nfc(s: &str) -> Cow<'_, str> {
    match is_nfc_quick(s.chars()) {
        IsNormalized::Yes => Cow::Borrowed(s),
        _ => Cow::Owned(s.nfc().collect()),
    }
}

pub(crate) fn char_len(s: &str) -> usize {
    s.chars().count()
}

/// Removes a trailing `suffix` from `surface` at codepoint granularity.
///
/// Returns `None` when `suffix` is not a trailing substring. An empty suffix
/// returns `surface` unchanged.
pub fn strip_suffix<'a>(surface: &'a str, suffix: &str) -> Option<&'a str> {
    // `str::strip_suffix` compares bytes, and UTF-8 byte boundaries coincide
    // with codepoint boundaries, so this is codepoint-exact.
    surface.strip_suffix(suffix)
}
