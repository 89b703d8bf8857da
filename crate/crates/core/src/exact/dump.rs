//! Binary state dump: a text header line `PGSV1 n=<n>` followed by `2^n`
//! little-endian `(re, im)` f64 pairs.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use super::StateVector;
use crate::error::{Error, Result};

const MAGIC: &str = "PGSV1";

impl StateVector {
    pub fn write_dump<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{MAGIC} n={}", self.n)?;
        for a in &self.amps {
            w.write_all(&a.re.to_le_bytes())?;
            w.write_all(&a.im.to_le_bytes())?;
        }
        w.flush()
    }

    pub fn read_dump<R: BufRead>(mut r: R) -> Result<Self> {
        let mut header = String::new();
        r.read_line(&mut header)
            .map_err(|e| Error::Dump(e.to_string()))?;
        let n: usize = header
            .trim_end_matches('\n')
            .strip_prefix(MAGIC)
            .and_then(|rest| rest.strip_prefix(" n="))
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::Dump(format!("bad header {header:?}")))?;
        if n > super::HARD_CAP {
            return Err(Error::CapExceeded {
                n,
                cap: super::HARD_CAP,
            });
        }
        let mut amps = Vec::with_capacity(1 << n);
        let mut buf = [0u8; 16];
        for _ in 0..1usize << n {
            r.read_exact(&mut buf)
                .map_err(|e| Error::Dump(e.to_string()))?;
            let re = f64::from_le_bytes(buf[..8].try_into().expect("8 bytes"));
            let im = f64::from_le_bytes(buf[8..].try_into().expect("8 bytes"));
            amps.push(Complex64::new(re, im));
        }
        if r.read(&mut buf).map_err(|e| Error::Dump(e.to_string()))? != 0 {
            return Err(Error::Dump("trailing bytes after amplitudes".into()));
        }
        StateVector::from_amplitudes(n, amps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::build_pgs;
    use crate::graph::Graph;

    #[test]
    fn dump_layout_and_round_trip() {
        let s = build_pgs(&Graph::path(2), std::f64::consts::PI).unwrap();
        let mut buf = Vec::new();
        s.write_dump(&mut buf).unwrap();
        assert!(buf.starts_with(b"PGSV1 n=2\n"));
        assert_eq!(buf.len(), 10 + 4 * 16);
        assert_eq!(&buf[10..18], &0.5f64.to_le_bytes());
        let back = StateVector::read_dump(buf.as_slice()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn rejects_truncated_and_bad_headers() {
        let s = StateVector::plus_state(1).unwrap();
        let mut buf = Vec::new();
        s.write_dump(&mut buf).unwrap();
        assert!(StateVector::read_dump(&buf[..buf.len() - 1]).is_err());
        assert!(StateVector::read_dump(&b"PGSV2 n=1\n"[..]).is_err());
        buf.push(0);
        assert!(StateVector::read_dump(buf.as_slice()).is_err());
    }
}
