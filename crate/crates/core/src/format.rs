//! Tour file formats.
//!
//! Text format v1:
//!
//! ```text
//! leapertour v1 move=2,1 dims=6x6
//! 0,0
//! 1,2
//! ...
//! ```
//!
//! One vertex per line; the closing step back to the first vertex is
//! implied. The JSON mirror is `{"move":[a,b],"dims":[...],"vertices":[[...],...]}`.

use serde::{Deserialize, Serialize};

use crate::board::{BoardSpec, Coord, MoveSpec};
use crate::error::{Error, Result};
use crate::tour::Tour;

const MAGIC: &str = "leapertour v1";

pub fn to_text(t: &Tour) -> String {
    let mut out = String::with_capacity(t.len() * 8 + 64);
    out.push_str(&format!("{MAGIC} move={} dims={}\n", t.mv(), t.board()));
    let mut c = vec![0i64; t.board().ndim()];
    for &v in t.vertices() {
        t.board().write_coord(v, &mut c);
        for (k, x) in c.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&x.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn from_text(s: &str) -> Result<Tour> {
    let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
    let rest = header
        .trim()
        .strip_prefix(MAGIC)
        .ok_or_else(|| Error::Parse { line: 1, msg: format!("expected `{MAGIC}` header") })?;
    let mut mv = None;
    let mut board = None;
    for field in rest.split_whitespace() {
        if let Some(m) = field.strip_prefix("move=") {
            mv = Some(MoveSpec::parse(m)?);
        } else if let Some(d) = field.strip_prefix("dims=") {
            board = Some(BoardSpec::parse(d)?);
        } else {
            return Err(Error::Parse { line: 1, msg: format!("unknown header field `{field}`") });
        }
    }
    let mv = mv.ok_or(Error::Parse { line: 1, msg: "missing move=".into() })?;
    let board = board.ok_or(Error::Parse { line: 1, msg: "missing dims=".into() })?;
    let mut coords = Vec::new();
    for (i, line) in lines {
        let c = line
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse { line: i + 1, msg: e.to_string() })?;
        if c.len() != board.ndim() {
            return Err(Error::Parse { line: i + 1, msg: format!("expected {} components", board.ndim()) });
        }
        coords.push(Coord(c));
    }
    Tour::from_coords(board, mv, &coords)
}

#[derive(Debug, Serialize, Deserialize)]
struct TourJson {
    #[serde(rename = "move")]
    mv: [u32; 2],
    dims: Vec<u32>,
    vertices: Vec<Vec<i64>>,
}

pub fn to_json(t: &Tour) -> Result<String> {
    let doc = TourJson {
        mv: [t.mv().long(), t.mv().short()],
        dims: t.board().dims().to_vec(),
        vertices: t.coords().map(|c| c.0).collect(),
    };
    Ok(serde_json::to_string(&doc)?)
}

pub fn from_json(s: &str) -> Result<Tour> {
    let doc: TourJson = serde_json::from_str(s)?;
    let board = BoardSpec::new(doc.dims)?;
    let mv = MoveSpec::new(doc.mv[0], doc.mv[1])?;
    let coords: Vec<Coord> = doc.vertices.into_iter().map(Coord).collect();
    Tour::from_coords(board, mv, &coords)
}

/// Reads either format, deciding by the first non-blank character.
pub fn parse_any(s: &str) -> Result<Tour> {
    if s.trim_start().starts_with('{') {
        from_json(s)
    } else {
        from_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Tour {
        let b = BoardSpec::square(4, 2).unwrap();
        let mv = MoveSpec::new(2, 1).unwrap();
        Tour::from_coords(b, mv, &[Coord::xy(0, 0), Coord::xy(1, 2), Coord::xy(3, 3), Coord::xy(2, 1)]).unwrap()
    }

    #[test]
    fn text_layout() {
        let s = to_text(&sample());
        assert!(s.starts_with("leapertour v1 move=2,1 dims=4x4\n0,0\n1,2\n"));
        assert_eq!(from_text(&s).unwrap(), sample());
    }

    #[test]
    fn json_and_text_agree() {
        let t = sample();
        let j = to_json(&t).unwrap();
        assert!(j.contains("\"move\":[2,1]"));
        assert_eq!(parse_any(&j).unwrap(), parse_any(&to_text(&t)).unwrap());
    }

    #[test]
    fn bad_header() {
        assert!(matches!(from_text("hello\n0,0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(from_text("leapertour v1 move=2,1 dims=4x4\n0,9\n").is_err());
        assert!(matches!(from_text("leapertour v1 move=2,1 dims=4x4\n0\n"), Err(Error::Parse { line: 2, .. })));
    }
}
