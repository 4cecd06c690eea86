mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::{fixture, p, set};
use jacobi::free_algebra::expand_bracket;
use jacobi::shuffles::omega;
use jacobi::text::{parse_element, parse_element_stanzas, parse_subsets};
use jacobi::GroupRingElement;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jacobi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn jacobi");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stanza_count(text: &str) -> usize {
    if text.is_empty() {
        0
    } else {
        text.lines().filter(|l| *l == "---").count() + 1
    }
}

#[test]
fn omega_command() {
    let o = run(&["omega", "2"], None);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1 1 2\n-1 2 1\n");
    assert_eq!(stdout(&run(&["omega", "1"], None)), "1 1\n");
    assert_eq!(
        stdout(&run(&["omega", "3"], None)),
        "1 1 2 3\n-1 2 1 3\n-1 3 1 2\n1 3 2 1\n"
    );
    for bad in ["0", "9", "x"] {
        let o = run(&["omega", bad], None);
        assert_eq!(code(&o), 2, "omega {bad}");
        assert!(stdout(&o).is_empty());
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn check_element_command() {
    let o = run(&["check-element"], Some("1 1 2\n1 2 1\n"));
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("JACOBI"));

    let o = run(&["check-element"], Some("1 1 2\n"));
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "NOT JACOBI\nwitness: tau = 1 2, value = 1\n");

    let o = run(&["check-element"], Some("1 1 X\n"));
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));

    let o = run(&["check-element", "-"], Some("1 1 2\n\n1 1 2 3\n"));
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"));

    let path = fixture("weighted4.element");
    let o = run(&["check-element", path.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);

    let o = run(&["check-element", "/nonexistent/file"], None);
    assert_eq!(code(&o), 2);
}

#[test]
fn check_subset_command() {
    let seven = fixture("seven4.subset");
    let o = run(&["check-subset", seven.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "JACOBI\n");

    let o = run(&["check-subset"], Some("1 2 3\n"));
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "NOT JACOBI\nwitness: tau = 1 2 3, plus = 1, minus = 0\n");

    let five = fixture("five4.subset");
    let o = run(&["check-subset", five.to_str().unwrap(), "--table"], None);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#') && l.contains(" | ")).collect();
    assert_eq!(rows.len(), 24);
    for row in rows {
        let counts: Vec<&str> = row.split(" | ").nth(1).unwrap().split(' ').collect();
        assert_eq!(counts[0], counts[1], "{row}");
    }

    // several stanzas: exit 1 if any fails
    let o = run(&["check-subset"], Some("1 2\n2 1\n---\n1 2\n"));
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("JACOBI")).count(), 1);

    let ragged = fixture("ragged.subset");
    let o = run(&["check-subset", ragged.to_str().unwrap()], None);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 2"));
}

#[test]
fn basis_command() {
    let o = run(&["basis", "2"], None);
    assert_eq!(code(&o), 0);
    let stanzas = parse_element_stanzas(&stdout(&o), Some(2)).unwrap();
    assert_eq!(stanzas.len(), 1);
    let antisym = GroupRingElement::from_terms(2, [(p(&[1, 2]), 1), (p(&[2, 1]), 1)]).unwrap();
    assert!(stanzas[0] == antisym || stanzas[0] == antisym.neg());

    assert_eq!(stanza_count(&stdout(&run(&["basis", "3"], None))), 4);
    let o4 = stdout(&run(&["basis", "4"], None));
    assert_eq!(stanza_count(&o4), 18);
    assert_eq!(parse_element_stanzas(&o4, Some(4)).unwrap().len(), 18);

    assert_eq!(code(&run(&["basis", "7"], None)), 2);
}

#[test]
fn search_command() {
    let o = run(&["search", "2", "--nonempty"], None);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1 2\n2 1\n");

    let o = run(&["search", "4", "--max-size", "4", "--containing-identity"], None);
    let (_, found) = parse_subsets(&stdout(&o), Some(4)).unwrap();
    assert!(found.contains(&set(&[&[1, 2, 3, 4], &[2, 1, 4, 3], &[3, 4, 1, 2], &[4, 3, 2, 1]])));

    let o = run(&["search", "3"], None);
    let (_, found) = parse_subsets(&stdout(&o), Some(3)).unwrap();
    assert!(found[0].is_empty());
    assert!(found.contains(&common::jacobi3()));

    let o = run(&["search", "5"], None);
    assert_eq!(code(&o), 2);
    let o = run(&["search", "6", "--max-size", "2"], None);
    assert_eq!(code(&o), 2);
}

#[test]
fn expand_command() {
    assert_eq!(stdout(&run(&["expand", "1", "2"], None)), "1 1 2\n-1 2 1\n");
    assert_eq!(
        stdout(&run(&["expand", "1", "2", "3"], None)),
        omega(3).unwrap().to_string()
    );
    let o = stdout(&run(&["expand", "2", "1", "3"], None));
    assert_eq!(o, omega(3).unwrap().translate(&p(&[2, 1, 3])).unwrap().to_string());
    assert_eq!(o, expand_bracket(&p(&[2, 1, 3])).to_string());
    assert_eq!(code(&run(&["expand", "1", "1"], None)), 2);
    assert_eq!(code(&run(&["expand"], None)), 2);
}

#[test]
fn printed_elements_reparse() {
    for args in [vec!["omega", "4"], vec!["expand", "3", "1", "4", "2"]] {
        let text = stdout(&run(&args, None));
        let e = parse_element(&text, None).unwrap();
        assert_eq!(e.to_string(), text);
    }
}
