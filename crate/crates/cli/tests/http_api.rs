mod common;
#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::collections::BTreeMap;

use common::Server;
use reqwest::blocking::Client;
use reqwest::StatusCode;
use serde_json::{json, Value};
use urdu_morph::morphology::inflect;
use urdu_morph::translit;

fn get(c: &Client, url: &str) -> (StatusCode, Value) {
    let r = c.get(url).send().unwrap();
    let code = r.status();
    (code, r.json().unwrap())
}

fn post(c: &Client, url: &str, body: &Value) -> (StatusCode, Value) {
    let r = c.post(url).json(body).send().unwrap();
    let code = r.status();
    (code, r.json().unwrap())
}

fn decision(list: &str, paradigm: &str, stem: &str, verdict: &str) -> Value {
    json!({
        "list": list,
        "candidate_key": { "paradigm": paradigm, "stem": stem },
        "verdict": verdict,
        "reviewer": "tester",
    })
}

fn statuses(c: &Client, s: &Server, list: &str) -> BTreeMap<String, String> {
    let (code, page) = get(c, &s.url(&format!("/candidates?list={list}&per_page=1000")));
    assert_eq!(code, StatusCode::OK);
    page["items"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| (format!("{} {}", i["paradigm"].as_str().unwrap(), i["stem"].as_str().unwrap()), i["status"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn lookup_endpoints() {
    let dir = tempfile::tempdir().unwrap();
    let s = Server::start(dir.path());
    let c = Client::new();

    let (code, v) = get(&c, &s.url("/analyze?text=ktabyN"));
    assert_eq!(code, StatusCode::OK);
    let line = v["tokens"][0]["analyses"][0]["line"].as_str().unwrap();
    assert!(line.starts_with("ktab_") && line.ends_with(". کتاب +N - Pl Nom - Fem -"), "{line}");
    let (_, v) = get(&c, &s.url("/analyze?text=zzz"));
    assert_eq!(v["tokens"][0]["analyses"], json!([]));

    let (code, v) = get(&c, &s.url("/translit?text=%DA%A9%D9%8E%D9%88%D8%B4%D9%90%D8%B4&to=roman"));
    assert_eq!(code, StatusCode::OK);
    assert_eq!(v["result"], "k(a)wX(i)X");
    assert_eq!(get(&c, &s.url("/translit?text=x&to=klingon")).0, StatusCode::BAD_REQUEST);
    assert_eq!(get(&c, &s.url("/translit?to=roman")).0, StatusCode::BAD_REQUEST);

    let (code, v) = get(&c, &s.url("/synth?lemma=ktab"));
    assert_eq!(code, StatusCode::OK);
    assert_eq!(v["entries"][0]["rows"].as_array().unwrap().len(), 6);
    let (code, v) = get(&c, &s.url("/synth?lemma=zzz"));
    assert_eq!(code, StatusCode::NOT_FOUND);
    assert!(v["error"].is_string());

    let (_, v) = get(&c, &s.url("/parse?text=yh%20myra%20qlm%20t%7Cha"));
    let tree = v["trees"][0].as_str().unwrap().to_string();
    let (code, v) = get(&c, &s.url(&format!("/linearize?tree={}", urlencode(&tree))));
    assert_eq!(code, StatusCode::OK);
    assert_eq!(v["sentence"], "یہ میرا قلم تھا");
    assert_eq!(get(&c, &s.url("/linearize?tree=UseN")).0, StatusCode::BAD_REQUEST);
}

#[test]
fn keyboard_covers_the_table() {
    let dir = tempfile::tempdir().unwrap();
    let s = Server::start(dir.path());
    let (code, v) = get(&Client::new(), &s.url("/keyboard-layout"));
    assert_eq!(code, StatusCode::OK);
    let keys: Vec<&Value> = v["rows"].as_array().unwrap().iter().flat_map(|r| r["keys"].as_array().unwrap()).collect();
    let table = translit::shipped().entries();
    assert_eq!(keys.len(), table.len());
    for e in table {
        assert!(keys.iter().any(|k| k["label"] == e.urdu.as_str() && k["roman"] == e.roman.as_str()), "{}", e.roman);
    }
}

fn urlencode(s: &str) -> String {
    s.bytes()
        .map(|b| match b {
            b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'-' | b'_' | b'.' | b'~' => (b as char).to_string(),
            _ => format!("%{b:02X}"),
        })
        .collect()
}

#[test]
fn curation_flow_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let s = Server::start(dir.path());
    let c = Client::new();
    let corpus = "kagz kagzwN kagzwN myz myzyN zzz";
    let (code, v) = post(&c, &s.url("/extract"), &json!({ "corpus": corpus }));
    assert_eq!(code, StatusCode::OK);
    let list = v["list"].as_str().unwrap().to_string();
    assert!(v["count"].as_u64().unwrap() >= 2);

    let (_, page) = get(&c, &s.url(&format!("/candidates?list={list}")));
    let first = &page["items"][0];
    assert_eq!(first["stem"], "kagz", "highest frequency first");

    assert_eq!(post(&c, &s.url("/decisions"), &decision(&list, "n2", "kagz", "accept")).0, StatusCode::OK);
    assert_eq!(post(&c, &s.url("/decisions"), &decision(&list, "n6", "myz", "reject")).0, StatusCode::OK);

    let (code, acc) = get(&c, &s.url(&format!("/candidates?list={list}&status=accepted")));
    assert_eq!(code, StatusCode::OK);
    assert_eq!(acc["total"], 1);
    assert_eq!(acc["items"][0]["stem"], "kagz");

    let export = c.get(s.url("/lexicon/export?format=source")).send().unwrap().text().unwrap();
    assert!(export.lines().any(|l| l == "n2 kagz"));
    assert!(!export.lines().any(|l| l == "n6 myz"));
    let tsv = c.get(s.url("/lexicon/export")).send().unwrap().text().unwrap();
    assert!(tsv.contains("kagzwN"));
    assert!(!tsv.contains("myzyN"));

    // Error statuses.
    let r = c.post(s.url("/decisions")).body("{not json").send().unwrap();
    assert_eq!(r.status(), StatusCode::BAD_REQUEST);
    assert_eq!(post(&c, &s.url("/decisions"), &json!({"list": list})).0, StatusCode::BAD_REQUEST);
    assert_eq!(post(&c, &s.url("/decisions"), &decision("list-9999", "n2", "kagz", "accept")).0, StatusCode::NOT_FOUND);
    assert_eq!(post(&c, &s.url("/decisions"), &decision(&list, "n2", "nothing", "accept")).0, StatusCode::NOT_FOUND);
    assert_eq!(post(&c, &s.url("/decisions"), &decision(&list, "n6", "myz", "edit")).0, StatusCode::CONFLICT);
    let mut bad_edit = decision(&list, "n6", "myz", "edit");
    bad_edit["edited_forms"] = json!(["myz", "myz", "myz"]);
    assert_eq!(post(&c, &s.url("/decisions"), &bad_edit).0, StatusCode::BAD_REQUEST);
    assert_eq!(get(&c, &s.url("/candidates?list=list-9999")).0, StatusCode::NOT_FOUND);
    assert_eq!(get(&c, &s.url(&format!("/candidates?list={list}&status=maybe"))).0, StatusCode::BAD_REQUEST);
    assert_eq!(get(&c, &s.url(&format!("/candidates?list={list}&page=0"))).0, StatusCode::BAD_REQUEST);
    assert_eq!(get(&c, &s.url("/lexicon/export?format=xml")).0, StatusCode::BAD_REQUEST);
    let r = c.post(s.url("/extract")).header("content-type", "application/json").body("[]").send().unwrap();
    assert_eq!(r.status(), StatusCode::BAD_REQUEST);

    // An edit supersedes the rejection.
    let mut edit = decision(&list, "n6", "myz", "edit");
    edit["edited_forms"] = json!(["myz"]);
    assert_eq!(post(&c, &s.url("/decisions"), &edit).0, StatusCode::OK);
    let export = c.get(s.url("/lexicon/export?format=source")).send().unwrap().text().unwrap();
    assert!(export.lines().any(|l| l == "n6 myz"));
    let log = std::fs::read_to_string(dir.path().join("decisions.log")).unwrap();
    assert_eq!(log.lines().count(), 3, "failed requests are not logged");
}

#[test]
fn empty_list_gives_empty_page() {
    let dir = tempfile::tempdir().unwrap();
    let s = Server::start(dir.path());
    let c = Client::new();
    let r = c.post(s.url("/extract")).body("zzz").send().unwrap();
    let v: Value = r.json().unwrap();
    assert_eq!(v["count"], 0);
    let (code, page) = get(&c, &s.url(&format!("/candidates?list={}", v["list"].as_str().unwrap())));
    assert_eq!(code, StatusCode::OK);
    assert_eq!(page["total"], 0);
    assert_eq!(page["items"], json!([]));
}

#[test]
fn restart_replays_one_hundred_decisions() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = support::rng(41);
    let corpus = support::synthetic_corpus(&mut rng, 120, 3000);
    let text = corpus.tokens.join(" ");
    let c = Client::new();

    let s = Server::start(dir.path());
    let (_, v) = post(&c, &s.url("/extract"), &json!({ "corpus": text, "script": "roman" }));
    let list = v["list"].as_str().unwrap().to_string();
    let (_, page) = get(&c, &s.url(&format!("/candidates?list={list}&per_page=1000")));
    let items: Vec<Value> = page["items"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|i| {
            let forms: Vec<&str> = i["forms"].as_array().unwrap().iter().map(|f| f.as_str().unwrap()).collect();
            inflect(i["paradigm"].as_str().unwrap(), &forms).is_ok()
        })
        .cloned()
        .collect();
    assert!(items.len() >= 20, "only {} candidates", items.len());
    use rand::Rng;
    for i in 0..100 {
        let item = &items[rng.gen_range(0..items.len())];
        let (p, st) = (item["paradigm"].as_str().unwrap(), item["stem"].as_str().unwrap());
        let verdict = if i % 3 == 0 { "reject" } else { "accept" };
        let (code, body) = post(&c, &s.url("/decisions"), &decision(&list, p, st, verdict));
        assert_eq!(code, StatusCode::OK, "{p} {st}: {body}");
    }
    let before = statuses(&c, &s, &list);
    let export_before = c.get(s.url("/lexicon/export?format=source")).send().unwrap().text().unwrap();
    s.stop();

    for _ in 0..2 {
        let s = Server::start(dir.path());
        assert_eq!(statuses(&c, &s, &list), before);
        let export = c.get(s.url("/lexicon/export?format=source")).send().unwrap().text().unwrap();
        assert_eq!(export, export_before);
    }
}

#[test]
fn concurrent_decisions_are_serialized() {
    let dir = tempfile::tempdir().unwrap();
    let s = Server::start(dir.path());
    let c = Client::new();
    let (_, v) = post(&c, &s.url("/extract"), &json!({ "corpus": "qlm qlmwN bat batyN" }));
    let list = v["list"].as_str().unwrap().to_string();
    std::thread::scope(|scope| {
        for t in 0..8 {
            let (s, list) = (&s, &list);
            scope.spawn(move || {
                let c = Client::new();
                for i in 0..10 {
                    let verdict = if (t + i) % 2 == 0 { "accept" } else { "reject" };
                    let (code, _) = post(&c, &s.url("/decisions"), &decision(list, "n2", "qlm", verdict));
                    assert_eq!(code, StatusCode::OK);
                    let (code, _) = get(&c, &s.url(&format!("/candidates?list={list}")));
                    assert_eq!(code, StatusCode::OK);
                }
            });
        }
    });
    let log = std::fs::read_to_string(dir.path().join("decisions.log")).unwrap();
    assert_eq!(log.lines().count(), 80);
    let last: Value = serde_json::from_str(log.lines().last().unwrap()).unwrap();
    let want = if last["verdict"] == "accept" { "accepted" } else { "rejected" };
    assert_eq!(statuses(&c, &s, &list)["n2 qlm"], want);
}
