use bhl::report::Status;
use bhl::suite::{criterion, is_known_failure, CRITERIA, KNOWN_FAILURES};

/// One PASS/FAIL line per criterion. A criterion whose only failures are the listed known
/// failures still prints FAIL; any other failure fails this test.
#[test]
fn acceptance() {
    let reports: Vec<_> = std::thread::scope(|s| {
        let hs: Vec<_> = (1..=CRITERIA).map(|k| s.spawn(move || criterion(k))).collect();
        hs.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut unexpected = vec![];
    let mut known_seen = vec![];
    for (k, rep) in (1..=CRITERIA).zip(reports) {
        let rep = match rep {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL criterion {k} (error: {e})");
                unexpected.push(format!("c{k}: {e}"));
                continue;
            }
        };
        assert!(!rep.checks.is_empty(), "criterion {k} ran no checks");
        let bad: Vec<_> = rep.checks.iter().filter(|c| c.status != Status::Pass).collect();
        if bad.is_empty() {
            println!("PASS criterion {k} ({} checks)", rep.checks.len());
            continue;
        }
        let ids: Vec<&str> = bad.iter().map(|c| c.check.as_str()).collect();
        println!("FAIL criterion {k} ({} of {} checks: {})", bad.len(), rep.checks.len(), ids.join(", "));
        for c in bad {
            if is_known_failure(&c.check) {
                known_seen.push(c.check.clone());
            } else {
                unexpected.push(format!("{}: {}", c.check, c.witness.clone().unwrap_or_default()));
            }
        }
    }
    for (prefix, why) in KNOWN_FAILURES {
        println!("known failure {prefix}: {why}");
    }
    assert!(unexpected.is_empty(), "unexpected failures:\n{}", unexpected.join("\n"));
    // the known failure must still be observed; a silent fix should update the list
    for (prefix, _) in KNOWN_FAILURES {
        assert!(known_seen.iter().any(|id| id.starts_with(prefix)), "{prefix} no longer fails");
    }
}
