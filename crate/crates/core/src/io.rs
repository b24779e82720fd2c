//! Plain-text file formats.
//!
//! ```text
//! hrep              vrep
//! m d               nv nr
//! h11 .. h1d b1     v x1 .. xd      (nv lines, any order with r lines)
//! ...               r x1 .. xd      (nr lines)
//! end               pairs           (optional section)
//!                   o1 .. od | r1 .. rd
//!                   end
//! ```
//!
//! Tokens are whitespace-separated; `#` starts a comment; blank lines are
//! ignored. Numbers are integers, decimals (with optional exponent), or
//! `p/q` fractions; in rational mode every form is read exactly. Ray
//! directions are canonicalized on both read and write.

use crate::matrix::Mat;
use crate::model::{canonicalize_ray, HRep, RayPair, VrRep};
use crate::numerics::Scalar;
use crate::Error;

#[derive(Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn err(t: &Tok, msg: impl Into<String>) -> Error {
    Error::Parse {
        line: t.line,
        col: t.col,
        msg: msg.into(),
    }
}

/// Comment-stripped, non-blank lines as token lists with 1-based positions.
fn tokenize(text: &str) -> Vec<Vec<Tok<'_>>> {
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut toks = Vec::new();
        let mut offset = 0;
        for part in body.split_whitespace() {
            let pos = body[offset..].find(part).expect("token comes from body") + offset;
            offset = pos + part.len();
            toks.push(Tok {
                text: part,
                line: idx + 1,
                col: pos + 1,
            });
        }
        if !toks.is_empty() {
            lines.push(toks);
        }
    }
    lines
}

struct Lines<'a> {
    lines: std::vec::IntoIter<Vec<Tok<'a>>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            lines: tokenize(text).into_iter(),
            last_line: 0,
        }
    }

    fn next_line(&mut self, what: &str) -> Result<Vec<Tok<'a>>, Error> {
        match self.lines.next() {
            Some(l) => {
                self.last_line = l[0].line;
                Ok(l)
            }
            None => Err(Error::Parse {
                line: self.last_line + 1,
                col: 1,
                msg: format!("unexpected end of input: expected {what}"),
            }),
        }
    }

    fn finish_after_end(&mut self) -> Result<(), Error> {
        match self.lines.next() {
            Some(extra) => Err(err(&extra[0], "content after `end`")),
            None => Ok(()),
        }
    }

    fn expect_end(&mut self) -> Result<(), Error> {
        let line = self.next_line("the `end` terminator")?;
        expect_count(&line, 1, "exactly `end`")?;
        if line[0].text != "end" {
            return Err(err(&line[0], "expected the `end` terminator"));
        }
        self.finish_after_end()
    }
}

fn expect_count(line: &[Tok], n: usize, what: &str) -> Result<(), Error> {
    if line.len() == n {
        return Ok(());
    }
    if line.len() > n {
        return Err(err(
            &line[n],
            format!("unexpected extra token; expected {what}"),
        ));
    }
    let last = line.last().expect("significant lines are nonempty");
    Err(Error::Parse {
        line: last.line,
        col: last.col + last.text.len(),
        msg: format!("expected {what}"),
    })
}

fn parse_usize(t: &Tok) -> Result<usize, Error> {
    t.text
        .parse()
        .map_err(|_| err(t, "expected a nonnegative integer"))
}

fn parse_scalar<S: Scalar>(t: &Tok) -> Result<S, Error> {
    S::parse_number(t.text).map_err(|msg| err(t, msg))
}

fn parse_scalars<S: Scalar>(toks: &[Tok]) -> Result<Vec<S>, Error> {
    toks.iter().map(|t| parse_scalar(t)).collect()
}

pub fn parse_hrep<S: Scalar>(text: &str) -> Result<HRep<S>, Error> {
    let mut lines = Lines::new(text);
    let header = lines.next_line("the `hrep` header")?;
    expect_count(&header, 1, "exactly `hrep`")?;
    if header[0].text != "hrep" {
        return Err(err(&header[0], "expected the `hrep` header"));
    }
    let dims = lines.next_line("the dimension line `m d`")?;
    expect_count(&dims, 2, "`m d` on the dimension line")?;
    let m = parse_usize(&dims[0])?;
    let d = parse_usize(&dims[1])?;
    if m < 1 {
        return Err(err(&dims[0], "m must be at least 1"));
    }
    if d < 1 {
        return Err(err(&dims[1], "d must be at least 1"));
    }
    let mut rows = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines.next_line("an inequality line")?;
        expect_count(&line, d + 1, &format!("{d} coefficients and a bound"))?;
        rows.push(parse_scalars(&line[..d])?);
        b.push(parse_scalar(&line[d])?);
    }
    lines.expect_end()?;
    Ok(HRep::new(Mat::from_rows(rows), b))
}

pub fn parse_vrep<S: Scalar>(text: &str) -> Result<VrRep<S>, Error> {
    let mut lines = Lines::new(text);
    let header = lines.next_line("the `vrep` header")?;
    expect_count(&header, 1, "exactly `vrep`")?;
    if header[0].text != "vrep" {
        return Err(err(&header[0], "expected the `vrep` header"));
    }
    let counts = lines.next_line("the count line `nv nr`")?;
    expect_count(&counts, 2, "`nv nr` on the count line")?;
    let nv = parse_usize(&counts[0])?;
    let nr = parse_usize(&counts[1])?;

    let mut d: Option<usize> = None;
    let mut vertices = Vec::with_capacity(nv);
    let mut rays = Vec::with_capacity(nr);
    for _ in 0..nv + nr {
        let line = lines.next_line("a generator line (`v ...` or `r ...`)")?;
        let kind = line[0];
        if kind.text != "v" && kind.text != "r" {
            return Err(err(&kind, "generator lines start with `v` or `r`"));
        }
        let want = match d {
            Some(d) => d,
            None => {
                if line.len() < 2 {
                    return Err(err(&kind, "a generator needs at least one coordinate"));
                }
                let inferred = line.len() - 1;
                d = Some(inferred);
                inferred
            }
        };
        expect_count(
            &line,
            want + 1,
            &format!("`{}` and {want} coordinates", kind.text),
        )?;
        let coords: Vec<S> = parse_scalars(&line[1..])?;
        if kind.text == "v" {
            if vertices.contains(&coords) {
                return Err(Error::DuplicateVertex { line: kind.line });
            }
            vertices.push(coords);
        } else {
            let canon =
                canonicalize_ray(&coords).map_err(|_| err(&line[1], "ray direction is zero"))?;
            if rays.contains(&canon) {
                return Err(err(&kind, "duplicate ray direction"));
            }
            rays.push(canon);
        }
    }
    if vertices.len() != nv {
        return Err(err(
            &counts[0],
            format!("header says {nv} vertices, found {}", vertices.len()),
        ));
    }
    if rays.len() != nr {
        return Err(err(
            &counts[1],
            format!("header says {nr} rays, found {}", rays.len()),
        ));
    }

    let line = lines.next_line("`pairs` or `end`")?;
    if line[0].text == "pairs" {
        expect_count(&line, 1, "exactly `pairs`")?;
        let mut pairs = Vec::new();
        loop {
            let line = lines.next_line("a pair line or `end`")?;
            if line[0].text == "end" {
                expect_count(&line, 1, "exactly `end`")?;
                lines.finish_after_end()?;
                return Ok(VrRep {
                    vertices,
                    rays,
                    ray_pairs: Some(pairs),
                });
            }
            let Some(d) = d else {
                return Err(err(
                    &line[0],
                    "pairs need at least one generator to fix the dimension",
                ));
            };
            expect_count(
                &line,
                2 * d + 1,
                &format!("{d} origin coordinates, `|`, and {d} direction coordinates"),
            )?;
            if line[d].text != "|" {
                return Err(err(&line[d], "expected `|` between origin and direction"));
            }
            let origin = parse_scalars(&line[..d])?;
            let raw: Vec<S> = parse_scalars(&line[d + 1..])?;
            let direction =
                canonicalize_ray(&raw).map_err(|_| err(&line[d + 1], "ray direction is zero"))?;
            pairs.push(RayPair { origin, direction });
        }
    }
    expect_count(&line, 1, "exactly `end`")?;
    if line[0].text != "end" {
        return Err(err(&line[0], "expected `pairs` or `end`"));
    }
    lines.finish_after_end()?;
    Ok(VrRep {
        vertices,
        rays,
        ray_pairs: None,
    })
}

fn join<S: Scalar>(xs: &[S]) -> String {
    xs.iter().map(Scalar::render).collect::<Vec<_>>().join(" ")
}

pub fn serialize_hrep<S: Scalar>(p: &HRep<S>) -> String {
    let mut out = format!("hrep\n{} {}\n", p.m(), p.d());
    for i in 1..=p.m() {
        let (h, b) = p.inequality(i);
        out.push_str(&join(h));
        out.push(' ');
        out.push_str(&b.render());
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

/// Writes a VR file; with `with_origins`, the stored ray pairs go into a
/// `pairs` section. Ray directions are written in canonical form.
///
/// Panics if a stored ray direction is zero.
pub fn serialize_vrep<S: Scalar>(vr: &VrRep<S>, with_origins: bool) -> String {
    let mut out = format!("vrep\n{} {}\n", vr.vertices.len(), vr.rays.len());
    for v in &vr.vertices {
        out.push_str("v ");
        out.push_str(&join(v));
        out.push('\n');
    }
    for r in &vr.rays {
        let canon = canonicalize_ray(r).expect("ray directions must be nonzero");
        out.push_str("r ");
        out.push_str(&join(&canon));
        out.push('\n');
    }
    if with_origins {
        if let Some(pairs) = &vr.ray_pairs {
            out.push_str("pairs\n");
            for pair in pairs {
                let canon =
                    canonicalize_ray(&pair.direction).expect("ray directions must be nonzero");
                out.push_str(&join(&pair.origin));
                out.push_str(" | ");
                out.push_str(&join(&canon));
                out.push('\n');
            }
        }
    }
    out.push_str("end\n");
    out
}
