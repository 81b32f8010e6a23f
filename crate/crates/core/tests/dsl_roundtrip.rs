//! Sessions survive render → parse unchanged, errors carry kinds and
//! positions, and reports are deterministic.

use std::path::PathBuf;

use lspin::dsl::{evaluate, parse_session, ErrorKind, NumericOptions};

fn sessions() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("sessions");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "lspin"))
        .collect();
    files.sort();
    assert!(!files.is_empty());
    files
        .into_iter()
        .map(|f| (f.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&f).unwrap()))
        .collect()
}

#[test]
fn every_sample_session_round_trips() {
    for (name, text) in sessions() {
        let s = parse_session(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let rendered = s.render();
        let again = parse_session(&rendered).unwrap_or_else(|e| panic!("{name} rendered: {e}"));
        assert_eq!(s, again, "{name}");
        assert_eq!(again.render(), rendered, "{name}: render is not a fixed point");
        // Error positions move when comments are dropped; results must not.
        let (a, b) = (evaluate(&s, None), evaluate(&again, None));
        for (x, y) in a.queries.iter().zip(&b.queries) {
            assert_eq!((&x.input, &x.result, x.error.is_some()), (&y.input, &y.result, y.error.is_some()), "{name}");
        }
    }
}

#[test]
fn whitespace_and_comments_do_not_matter() {
    let a = parse_session("repr P = IVa(sigma); compute lfactor(P, sigma);").unwrap();
    let b = parse_session("# header\nrepr   P=IVa( sigma ) ;\n\n  compute lfactor ( P , sigma ) ; # trailing\n").unwrap();
    assert_eq!(a, b);
}

#[test]
fn reports_are_deterministic() {
    for (name, text) in sessions() {
        let s = parse_session(&text).unwrap();
        let opts = Some(NumericOptions { q: 5, seed: 7 });
        assert_eq!(evaluate(&s, opts).to_json(), evaluate(&s, opts).to_json(), "{name}");
        assert_eq!(evaluate(&s, None).to_text(), evaluate(&s, None).to_text(), "{name}");
    }
}

#[test]
fn sample_outcomes() {
    let expect_ok = |name: &str| {
        let (_, text) = sessions().into_iter().find(|(n, _)| n == name).unwrap();
        evaluate(&parse_session(&text).unwrap(), None).ok()
    };
    assert!(expect_ok("iva.lspin"));
    assert!(expect_ok("type_i.lspin"));
    assert!(expect_ok("iiib.lspin"));
    assert!(expect_ok("iiib_chi_nu.lspin"));
    assert!(!expect_ok("vd.lspin"));
    assert!(!expect_ok("iib_inadmissible.lspin"));
}

#[test]
fn errors_report_kind_and_position() {
    let cases: &[(&str, ErrorKind, usize, usize)] = &[
        ("repr P = IVa(sigma)", ErrorKind::Syntax, 1, 20),
        ("repr P = Q(sigma);", ErrorKind::UnknownType, 1, 10),
        ("chars { s: unramified; }\n\nrepr P = IVa(t);", ErrorKind::UnknownGenerator, 3, 14),
        ("chars { xi: unramified; s: unramified; }\nrepr P = Va(xi, s);", ErrorKind::ConstraintViolation, 2, 10),
        ("chars { a: ramified; b: unramified; }\nrelations {\n    a = b;\n}", ErrorKind::ConstraintViolation, 3, 5),
        ("bessel nu = sigma;", ErrorKind::Syntax, 1, 8),
    ];
    for &(text, kind, line, col) in cases {
        let e = parse_session(text).unwrap_err();
        assert_eq!((e.kind, e.line, e.col), (kind, line, col), "{text}: {e}");
    }
}

#[test]
fn evaluation_errors_stay_per_query() {
    let s = parse_session("repr P = Vd(xi, sigma);\nrepr Q = IVa(sigma);\ncompute lfactor(P, sigma);\ncompute lfactor(Q, sigma);\ncompute homdim(R, sigma);").unwrap();
    let r = evaluate(&s, None);
    assert!(r.queries[0].error.as_deref().unwrap().contains("NoBesselModel"));
    assert!(r.queries[1].error.is_none());
    assert!(r.queries[2].error.as_deref().unwrap().contains("UnknownName"));
    assert!(!r.ok());
}
