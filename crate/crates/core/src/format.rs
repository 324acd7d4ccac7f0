//! Hex bit-string encoding shared by the truth-table and grid file formats.
//!
//! Bits are written most significant first, four to a hex digit; the final
//! digit is padded with zero bits.

use bitvec::prelude::*;

use crate::error::{Error, Result};

pub(crate) type Bits = BitVec<u64, Lsb0>;

pub(crate) fn encode(bits: &BitSlice<u64, Lsb0>) -> String {
    let mut out = String::with_capacity(bits.len().div_ceil(4));
    for chunk in bits.chunks(4) {
        let mut nibble = 0u8;
        for (i, b) in chunk.iter().enumerate() {
            if *b {
                nibble |= 8 >> i;
            }
        }
        out.push(char::from_digit(nibble as u32, 16).unwrap());
    }
    out
}

pub(crate) fn decode(hex: &str, len: usize, line: usize) -> Result<Bits> {
    let hex = hex.trim();
    let expected = len.div_ceil(4);
    if hex.len() != expected {
        return Err(Error::parse(
            line,
            format!("expected {expected} hex digits for {len} bits, found {}", hex.len()),
        ));
    }
    let mut bits = Bits::with_capacity(expected * 4);
    for c in hex.chars() {
        let d = c
            .to_digit(16)
            .ok_or_else(|| Error::parse(line, format!("invalid hex digit `{c}`")))?;
        for i in 0..4 {
            bits.push(d & (8 >> i) != 0);
        }
    }
    if bits[len..].any() {
        return Err(Error::parse(line, "padding bits must be zero"));
    }
    bits.truncate(len);
    Ok(bits)
}

/// Reads `key=value` from a header line.
pub(crate) fn header<'a>(line: Option<&'a str>, key: &str, lineno: usize) -> Result<&'a str> {
    let line = line.ok_or_else(|| Error::parse(lineno, format!("missing `{key}=` line")))?;
    line.trim()
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::parse(lineno, format!("expected `{key}=...`, found `{}`", line.trim())))
}
