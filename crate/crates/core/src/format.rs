//! On-disk formats.
//!
//! `LBPS`: magic, version byte `1`, `n` as `u64` little-endian, then the
//! `2n + 2` parentheses packed most-significant bit first (open = 1) with
//! zero padding in the last byte.
//!
//! `LYAR`: magic, version byte `1`, width byte (4 or 8), `n` as `u64`
//! little-endian, then `λ[1..=n]` as little-endian integers of that width.

use std::io::{Read, Write};

use crate::bps::SuccinctPssTree;
use crate::construct::{LyndonArray, Width};
use crate::error::{Error, Result};

pub const LBPS_MAGIC: &[u8; 4] = b"LBPS";
pub const LYAR_MAGIC: &[u8; 4] = b"LYAR";
pub const VERSION: u8 = 1;

const LBPS_HEADER: usize = 4 + 1 + 8;
const LYAR_HEADER: usize = 4 + 1 + 1 + 8;

pub fn encode_lbps(tree: &SuccinctPssTree) -> Vec<u8> {
    let n = tree.text_len();
    let nbytes = (2 * n + 2).div_ceil(8);
    let mut out = Vec::with_capacity(LBPS_HEADER + nbytes);
    out.extend_from_slice(LBPS_MAGIC);
    out.push(VERSION);
    out.extend_from_slice(&(n as u64).to_le_bytes());
    // Bit p lives at bit p % 64 of word p / 64, so little-endian word bytes
    // are the payload bytes with their bits reversed.
    out.extend(
        tree.words()
            .iter()
            .flat_map(|w| w.to_le_bytes())
            .take(nbytes)
            .map(u8::reverse_bits),
    );
    out
}

pub fn decode_lbps(bytes: &[u8]) -> Result<SuccinctPssTree> {
    let n = header(bytes, LBPS_MAGIC, LBPS_HEADER)?;
    let len = n
        .checked_mul(2)
        .and_then(|x| x.checked_add(2))
        .ok_or_else(|| Error::integrity("LBPS length overflows"))?;
    let payload = &bytes[LBPS_HEADER..];
    if payload.len() != len.div_ceil(8) {
        return Err(Error::integrity(format!(
            "LBPS payload has {} bytes, expected {} for n = {n}",
            payload.len(),
            len.div_ceil(8)
        )));
    }
    if len % 8 != 0 && payload[payload.len() - 1] << (len % 8) != 0 {
        return Err(Error::integrity("LBPS padding bits are not zero"));
    }
    let words: Vec<u64> = payload
        .chunks(8)
        .map(|c| {
            let mut b = [0u8; 8];
            for (d, s) in b.iter_mut().zip(c) {
                *d = s.reverse_bits();
            }
            u64::from_le_bytes(b)
        })
        .collect();
    SuccinctPssTree::from_words(&words, len)
}

pub fn write_lbps<W: Write>(tree: &SuccinctPssTree, mut w: W) -> Result<()> {
    w.write_all(&encode_lbps(tree))?;
    Ok(())
}

pub fn read_lbps<R: Read>(mut r: R) -> Result<SuccinctPssTree> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    decode_lbps(&bytes)
}

pub fn encode_lyar(lambda: &LyndonArray) -> Vec<u8> {
    let width = lambda.width();
    let mut out = Vec::with_capacity(LYAR_HEADER + lambda.byte_len());
    out.extend_from_slice(LYAR_MAGIC);
    out.push(VERSION);
    out.push(width.bytes() as u8);
    out.extend_from_slice(&(lambda.len() as u64).to_le_bytes());
    match lambda {
        LyndonArray::W32(v) => v.iter().for_each(|x| out.extend_from_slice(&x.to_le_bytes())),
        LyndonArray::W64(v) => v.iter().for_each(|x| out.extend_from_slice(&x.to_le_bytes())),
    }
    out
}

/// Parses a `LYAR` file, checking that every value is a possible Lyndon
/// array entry (`1 ≤ λ[i] ≤ n − i + 1`).
pub fn decode_lyar(bytes: &[u8]) -> Result<LyndonArray> {
    let n = header(bytes, LYAR_MAGIC, LYAR_HEADER)?;
    let width = match bytes[5] {
        4 => Width::W32,
        8 => Width::W64,
        b => return Err(Error::integrity(format!("LYAR width byte {b} is not 4 or 8"))),
    };
    let payload = &bytes[LYAR_HEADER..];
    if Some(payload.len()) != n.checked_mul(width.bytes()) {
        return Err(Error::integrity(format!(
            "LYAR payload has {} bytes, expected {n} values of {} bytes",
            payload.len(),
            width.bytes()
        )));
    }
    let check = |i: usize, v: u64| {
        if v == 0 || v > (n - i) as u64 {
            Err(Error::integrity(format!("LYAR value {v} at index {} is out of range", i + 1)))
        } else {
            Ok(())
        }
    };
    Ok(match width {
        Width::W32 => {
            let v: Vec<u32> = payload.chunks_exact(4).map(|c| u32::from_le_bytes(c.try_into().unwrap())).collect();
            v.iter().enumerate().try_for_each(|(i, &x)| check(i, x as u64))?;
            LyndonArray::W32(v)
        }
        Width::W64 => {
            let v: Vec<u64> = payload.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect();
            v.iter().enumerate().try_for_each(|(i, &x)| check(i, x))?;
            LyndonArray::W64(v)
        }
    })
}

pub fn write_lyar<W: Write>(lambda: &LyndonArray, mut w: W) -> Result<()> {
    w.write_all(&encode_lyar(lambda))?;
    Ok(())
}

pub fn read_lyar<R: Read>(mut r: R) -> Result<LyndonArray> {
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    decode_lyar(&bytes)
}

/// Checks magic and version of a header of `size` bytes ending in `n` and
/// returns `n`.
fn header(bytes: &[u8], magic: &[u8; 4], size: usize) -> Result<usize> {
    let name = String::from_utf8_lossy(magic);
    if bytes.len() < size {
        return Err(Error::integrity(format!("{name} header truncated")));
    }
    if &bytes[..4] != magic {
        return Err(Error::integrity(format!("not a {name} file")));
    }
    if bytes[4] != VERSION {
        return Err(Error::integrity(format!("unsupported {name} version {}", bytes[4])));
    }
    let n = u64::from_le_bytes(bytes[size - 8..size].try_into().unwrap());
    usize::try_from(n).map_err(|_| Error::integrity(format!("{name} length {n} too large")))
}
