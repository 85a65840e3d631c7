use crate::error::Error;
use crate::projective::HomTriple;

use super::{Directive, Scene, SceneError, SceneErrorKind};

pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    let mut numbered = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let code = raw.split('#').next().unwrap_or("");
        for stmt in split_statements(code) {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let d = parse_statement(stmt).map_err(|kind| SceneError { line, kind })?;
            numbered.push((line, d));
        }
    }
    Scene::evaluate(numbered)
}

/// Splits on `;` outside parentheses (`h(A,B;C)` keeps its semicolon).
fn split_statements(code: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in code.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth <= 0 => {
                out.push(&code[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&code[start..]);
    out
}

fn syntax(msg: impl Into<String>) -> SceneErrorKind {
    SceneErrorKind::Syntax(msg.into())
}

fn ident(s: &str) -> Result<String, SceneErrorKind> {
    let s = s.trim();
    let mut chars = s.chars();
    let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(s.to_string())
    } else {
        Err(syntax(format!("invalid name {s:?}")))
    }
}

fn triple(s: &str) -> Result<HomTriple, SceneErrorKind> {
    s.parse().map_err(|e| match e {
        Error::InvalidRational(_) => SceneErrorKind::InvalidRational(s.to_string()),
        Error::InvalidTriple(_) => syntax(format!("malformed triple {s:?}")),
        other => SceneErrorKind::Geometry(other),
    })
}

fn binding(rest: &str) -> Result<(String, &str), SceneErrorKind> {
    let (name, rhs) = rest.split_once('=').ok_or_else(|| syntax("expected `=`"))?;
    Ok((ident(name)?, rhs.trim()))
}

fn words<const N: usize>(s: &str, what: &str) -> Result<[String; N], SceneErrorKind> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != N {
        return Err(syntax(format!("expected {N} names for {what}")));
    }
    let mut out: [String; N] = std::array::from_fn(|_| String::new());
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = ident(p)?;
    }
    Ok(out)
}

fn parse_statement(stmt: &str) -> Result<Directive, SceneErrorKind> {
    let (keyword, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
    match keyword {
        "point" => {
            let (name, rhs) = binding(rest)?;
            if rhs.starts_with('[') {
                return Ok(Directive::Point { name, value: triple(rhs)?.into() });
            }
            match rhs.strip_prefix("meet") {
                Some(args) if args.starts_with(char::is_whitespace) => {
                    let [l, m] = words(args, "meet")?;
                    Ok(Directive::Meet { name, l, m })
                }
                _ => Err(syntax("expected `[a:b:c]` or `meet <l> <m>`")),
            }
        }
        "line" => {
            let (name, rhs) = binding(rest)?;
            if rhs.starts_with('[') {
                return Ok(Directive::Line { name, value: triple(rhs)?.into() });
            }
            match rhs.strip_prefix("join") {
                Some(args) if args.starts_with(char::is_whitespace) => {
                    let [p, q] = words(args, "join")?;
                    Ok(Directive::Join { name, p, q })
                }
                _ => Err(syntax("expected `[a:b:c]` or `join <p> <q>`")),
            }
        }
        "conjugate" => {
            let (name, rhs) = binding(rest)?;
            let call = rhs.strip_prefix('h').map(str::trim_start);
            let inner_and_tail = call
                .and_then(|c| c.strip_prefix('('))
                .and_then(|c| c.split_once(')'))
                .ok_or_else(|| syntax("expected `h(<A>,<B>;<C>)`"))?;
            let (inner, tail) = inner_and_tail;
            let (ab, c) = inner.split_once(';').ok_or_else(|| syntax("expected `;` before C"))?;
            let (a, b) = ab.split_once(',').ok_or_else(|| syntax("expected `,` between A and B"))?;
            let tail = tail.trim();
            let aux = if tail.is_empty() {
                None
            } else {
                let args = tail
                    .strip_prefix("with")
                    .filter(|a| a.starts_with(char::is_whitespace))
                    .ok_or_else(|| syntax("expected `with <l> <R>`"))?;
                let [l, r] = words(args, "with")?;
                Some((l, r))
            };
            Ok(Directive::Conjugate { name, a: ident(a)?, b: ident(b)?, c: ident(c)?, aux })
        }
        "quadrangle" => {
            let (lhs, rhs) = rest.split_once('=').ok_or_else(|| syntax("expected `=`"))?;
            Ok(Directive::Quadrangle { outputs: words(lhs, "quadrangle outputs")?, vertices: words(rhs, "quadrangle vertices")? })
        }
        other => Err(syntax(format!("unknown directive {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{ProjLine, ProjPoint};

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b, c).unwrap()
    }

    const WORKED: &str = "\
point A = [0:0:1]
point B = [1:0:1]
point C = [2:0:1]   # on AB
line l = [1:0:-2]
point R = [0:1:1]
conjugate D = h(A,B;C) with l R
";

    #[test]
    fn join_directive() {
        let s = parse_scene("point A = [0:0:1]\npoint B = [1:0:1]\nline ab = join A B").unwrap();
        assert_eq!(s.line("ab"), Some(&ProjLine::from_ints(0, 1, 0).unwrap()));
    }

    #[test]
    fn conjugate_directive() {
        let s = parse_scene(WORKED).unwrap();
        assert_eq!(s.point("D"), Some(&pt(2, 0, 3)));
        let (_, w) = s.witnesses().next().unwrap();
        assert_eq!(w.s, pt(2, -1, 2));
        let auto = parse_scene(&WORKED.replace(" with l R", "")).unwrap();
        assert_eq!(auto.point("D"), Some(&pt(2, 0, 3)));
    }

    #[test]
    fn semicolons_and_spacing() {
        let s = parse_scene("point A=[0:0:1]; point B = [1:0:1] ;point C = [1/2 : 0 : 1]\nconjugate D = h( A , B ; C )")
            .unwrap();
        assert_eq!(s.point("D"), Some(&pt(1, 0, 0)));
        assert_eq!(s.directives().len(), 4);
    }

    #[test]
    fn quadrangle_directive() {
        let text = "point P = [2:-1:1]; point Q = [0:1:0]; point R = [0:1:1]; point S = [2:-1:2]\nquadrangle A B C D = P Q R S";
        let s = parse_scene(text).unwrap();
        assert_eq!(s.point("C"), Some(&pt(2, 0, 1)));
        assert_eq!(s.point("D"), Some(&pt(2, 0, 3)));
    }

    fn err_at(text: &str) -> SceneError {
        parse_scene(text).unwrap_err()
    }

    #[test]
    fn meet_of_equal_lines_reports_line() {
        let e = err_at("point A = [0:0:1]\npoint B = [1:0:1]\nline ab = join A B\npoint X = meet ab ab");
        assert_eq!(e.line, 4);
        assert_eq!(e.to_string(), "line 4: meet of equal lines");
    }

    #[test]
    fn error_kinds() {
        assert!(matches!(err_at("pointy A = [0:0:1]").kind, SceneErrorKind::Syntax(_)));
        assert!(matches!(err_at("point A = [0:0]").kind, SceneErrorKind::Syntax(_)));
        assert!(matches!(err_at("point A = [0:x/2:1]").kind, SceneErrorKind::InvalidRational(_)));
        assert!(matches!(err_at("point A = [0:1/0:1]").kind, SceneErrorKind::InvalidRational(_)));
        let e = err_at("point A = [0:0:1]\nline l = join A Z");
        assert_eq!((e.line, e.kind), (2, SceneErrorKind::UnknownName("Z".into())));
        let e = err_at("line l = join A B\npoint A = [0:0:1]\npoint B = [1:0:1]");
        assert_eq!((e.line, e.kind), (1, SceneErrorKind::ForwardReference("A".into())));
        let e = err_at("point A = [0:0:1]\n\n# gap\npoint A = [1:0:1]");
        assert_eq!((e.line, e.kind), (4, SceneErrorKind::DuplicateName("A".into())));
        let e = err_at("point A = [0:0:1]; point B = [1:0:1]\npoint X = meet A B");
        assert!(matches!(e.kind, SceneErrorKind::WrongKind { expected: "line", .. }));
        let e = err_at("point A = [0:0:0]");
        assert_eq!(e.kind, SceneErrorKind::Geometry(Error::DegenerateCoordinates));
        let e = err_at("point A = [0:0:1]; point C = [0:1:1]\nconjugate D = h(A,A;C)");
        assert_eq!(e.kind, SceneErrorKind::Geometry(Error::BasePointsEqual));
    }

    #[test]
    fn print_round_trip() {
        let s = parse_scene(WORKED).unwrap();
        let reparsed = parse_scene(&s.to_string()).unwrap();
        assert_eq!(reparsed, s);
        assert_eq!(parse_scene(&s.to_single_line()).unwrap(), s);
    }
}
