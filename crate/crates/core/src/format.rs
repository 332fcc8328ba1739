//! The `.h3` text format.
//!
//! Edge-list form: a header line `n m`, then `m` lines `a b c` with 0-based
//! vertices in ascending order. Hex form: a header line `n:<n>` followed by
//! the raw triple bitmap as hex, two digits per byte, bytes in increasing
//! rank order and bit `k` of a byte holding rank `8*byte + k`. Blank lines
//! and `#` comments are ignored in both forms.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{triple_count, Hypergraph3};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, got `{tok}`"),
    })
}

/// Parses either form, chosen by the header.
pub fn parse(text: &str) -> Result<Hypergraph3> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    if let Some(rest) = header.strip_prefix("n:") {
        let mut toks = rest.split_whitespace();
        let n = parse_num(hline, toks.next().unwrap_or(""))?;
        let mut hex: String = toks.collect();
        for (_, l) in lines {
            hex.extend(l.chars().filter(|c| !c.is_whitespace()));
        }
        return parse_hex_body(n, &hex, hline);
    }

    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            msg: "header must be `n m`".into(),
        });
    }
    let n = parse_num(hline, toks[0])?;
    let m = parse_num(hline, toks[1])?;
    let mut triples = Vec::with_capacity(m);
    for (line, body) in lines {
        let t: Vec<&str> = body.split_whitespace().collect();
        if t.len() != 3 {
            return Err(Error::Parse {
                line,
                msg: "edge lines hold exactly three vertices".into(),
            });
        }
        let triple = [
            parse_num(line, t[0])?,
            parse_num(line, t[1])?,
            parse_num(line, t[2])?,
        ];
        if triples.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the {m} declared edges"),
            });
        }
        triples.push((line, triple));
    }
    if triples.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("declared {m} edges, found {}", triples.len()),
        });
    }
    let mut g = Hypergraph3::empty(n);
    for (line, t) in triples {
        g = g.with_edge(t).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
    }
    if g.edge_count() != m {
        return Err(Error::Parse {
            line: hline,
            msg: "duplicate edges".into(),
        });
    }
    Ok(g)
}

fn parse_hex_body(n: usize, hex: &str, line: usize) -> Result<Hypergraph3> {
    let bits = triple_count(n);
    let nbytes = bits.div_ceil(8);
    if hex.len() != 2 * nbytes {
        return Err(Error::Parse {
            line,
            msg: format!(
                "expected {} hex digits for n = {n}, got {}",
                2 * nbytes,
                hex.len()
            ),
        });
    }
    let mut words = vec![0u64; bits.div_ceil(64)];
    for i in 0..nbytes {
        let byte = u8::from_str_radix(&hex[2 * i..2 * i + 2], 16).map_err(|_| Error::Parse {
            line,
            msg: "invalid hex digit".into(),
        })?;
        words[i / 8] |= (byte as u64) << (8 * (i % 8));
    }
    Hypergraph3::from_words(n, words).map_err(|e| Error::Parse {
        line,
        msg: e.to_string(),
    })
}

/// Edge-list form, edges in colex order.
pub fn to_text(g: &Hypergraph3) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for [a, b, c] in g.edges() {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

/// Hex bitmap form.
pub fn to_hex(g: &Hypergraph3) -> String {
    let nbytes = triple_count(g.n()).div_ceil(8);
    let mut out = format!("n:{}\n", g.n());
    for i in 0..nbytes {
        let byte = (g.words()[i / 8] >> (8 * (i % 8))) & 0xff;
        let _ = write!(out, "{byte:02x}");
    }
    out.push('\n');
    out
}
