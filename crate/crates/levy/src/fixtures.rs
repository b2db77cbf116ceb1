//! Reading and writing tensor elements in the fixture text format, one
//! `<rational> : <word>` term per line.

use std::fs;
use std::io;
use std::path::Path;

use levy_core::tensor::TensorElement;

pub fn read_element(path: impl AsRef<Path>) -> io::Result<TensorElement> {
    let text = fs::read_to_string(path)?;
    TensorElement::parse(&text).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
}

pub fn write_element(path: impl AsRef<Path>, a: &TensorElement) -> io::Result<()> {
    fs::write(path, a.to_string())
}

/// Parses the compact command line form `c:word;c:word;…`, where a bare word
/// has coefficient one, e.g. `1:dX*dY;-1:dY*dX`.
pub fn parse_inline(spec: &str) -> levy_core::Result<TensorElement> {
    let mut lines = String::new();
    for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once(':') {
            Some((c, w)) => lines.push_str(&format!("{} : {}\n", c.trim(), w.trim())),
            None => lines.push_str(&format!("1 : {part}\n")),
        }
    }
    TensorElement::parse(&lines)
}
