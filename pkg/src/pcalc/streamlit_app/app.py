import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import streamlit as st

from ..cli.report import FAILED, PASSED, load_report
from ..config import load_env_file

SESSION_REPORT_KEY = "pcalc_report"
SESSION_SOURCE_KEY = "pcalc_report_source"
SESSION_FILTER_KEY = "pcalc_status_filter"
FOOTER_STYLE_KEY = "pcalc_footer_style"

STATUS_BADGES = {PASSED: "🟢 passed", FAILED: "🔴 failed"}
VERDICT_BADGES = {"equivalent": "✅ equivalent", "mismatch": "❌ mismatch"}


def configure_page() -> None:
    st.set_page_config(page_title="pcalc reports", page_icon="∮", layout="wide")
    st.markdown(
        """
        <style>
        .hero-box {
            background: linear-gradient(120deg, #1B3A6B, #3C8D93);
            color: #F4F7F8;
            padding: 1.8rem;
            border-radius: 16px;
            margin-bottom: 1.5rem;
        }
        .hero-box h1 {
            margin: 0 0 0.6rem 0;
        }
        </style>
        """,
        unsafe_allow_html=True,
    )


def render_intro() -> None:
    st.markdown(
        """
        <div class="hero-box">
            <h1>∮ pcalc report viewer</h1>
            <p>
                Browse the JSON report written by <code>pcalc run</code>. Nothing is recomputed here:
                every value, verdict and witness is read from the report as the engine wrote it.
            </p>
            <ul>
                <li>Upload a report or point to one on disk.</li>
                <li>Filter tasks by status.</li>
                <li>Open a task to see inputs, outputs, checks and the rules that were applied.</li>
            </ul>
        </div>
        """,
        unsafe_allow_html=True,
    )


def handle_load(uploaded_file, path_text: str) -> None:
    st.session_state.pop(SESSION_REPORT_KEY, None)
    st.session_state.pop(SESSION_SOURCE_KEY, None)

    try:
        if uploaded_file is not None:
            report = json.loads(uploaded_file.getvalue().decode("utf-8"))
            source = uploaded_file.name
        else:
            report = load_report(Path(path_text))
            source = path_text
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        st.error(f"Could not read the report: {exc}")
        return

    if not isinstance(report, dict) or "tasks" not in report:
        st.error("This file does not look like a pcalc report (no `tasks` entry).")
        return

    st.session_state[SESSION_REPORT_KEY] = report
    st.session_state[SESSION_SOURCE_KEY] = source


def render_load_form() -> None:
    with st.form("load_form"):
        uploaded_file = st.file_uploader("Report (JSON)", type=["json"])
        path_text = st.text_input("…or a path on disk", placeholder="reports/run.json")
        submitted = st.form_submit_button("Load report")

    if submitted:
        if uploaded_file is None and not path_text.strip():
            st.error("Upload a report or give a path.")
            return
        handle_load(uploaded_file, path_text.strip())


def render_summary(report: Dict[str, Any]) -> None:
    summary = report.get("summary", {})
    total = summary.get("tasks", len(report.get("tasks", [])))
    failed = summary.get("failed", [])

    st.subheader(f"Report for {report.get('source', 'unknown source')}")
    columns = st.columns(3)
    columns[0].metric("Tasks", total)
    columns[1].metric("Passed", summary.get("passed", total - len(failed)))
    columns[2].metric("Failed", len(failed))
    st.caption(f"pcalc {report.get('pcalc', '?')} • flags {json.dumps(report.get('flags', {}), sort_keys=True)}")


def task_label(task: Dict[str, Any]) -> str:
    label = f"{STATUS_BADGES.get(task.get('status'), task.get('status'))} • {task.get('name')} ({task.get('op')})"
    verdict = task.get("verdict")
    if verdict:
        label += f" • {VERDICT_BADGES.get(verdict, verdict)}"
    return label


def render_formula_report(payload: Dict[str, Any], depth: int = 0) -> None:
    if depth:
        st.markdown(f"**{payload.get('name')}** • {VERDICT_BADGES.get(payload.get('verdict'), payload.get('verdict'))}")
    if payload.get("lhs_text") is not None:
        st.markdown("**Left side**")
        st.code(payload["lhs_text"])
        st.markdown("**Right side**")
        st.code(payload.get("rhs_text") or "")
    if payload.get("witness_text") is not None:
        st.markdown("**Witness** (what the relations cannot reduce)")
        st.code(payload["witness_text"])

    checks: Dict[str, bool] = payload.get("checks", {})
    if checks:
        st.markdown("**Checks**")
        for name, holds in sorted(checks.items()):
            st.write(f"{'✅' if holds else '❌'} {name}")
    for note in payload.get("notes", []):
        st.warning(note)

    provenance: List[str] = payload.get("provenance", [])
    if provenance:
        st.markdown("**Provenance**")
        st.write(", ".join(f"`{tag}`" for tag in provenance))
    for sub in payload.get("subreports", []):
        st.divider()
        render_formula_report(sub, depth + 1)


def render_task(task: Dict[str, Any]) -> None:
    with st.expander(task_label(task), expanded=task.get("status") == FAILED):
        if task.get("error"):
            st.error(task["error"])
        if task.get("mismatch"):
            st.markdown("**Expectation mismatch**")
            st.code(json.dumps(task["mismatch"], indent=2, sort_keys=True), language="json")

        inputs_column, outputs_column = st.columns(2)
        with inputs_column:
            st.markdown("**Inputs**")
            st.json(task.get("inputs", {}), expanded=False)
        with outputs_column:
            st.markdown("**Outputs**")
            outputs = task.get("outputs", {})
            value = outputs.get("value")
            if isinstance(value, dict) and "text" in value:
                st.code(value["text"])
            st.json(outputs, expanded=False)

        formula = task.get("outputs", {}).get("report")
        if isinstance(formula, dict):
            render_formula_report(formula)
        sweep = task.get("outputs", {}).get("sweep")
        if isinstance(sweep, dict):
            st.caption(
                f"{sweep.get('passed', 0)}/{sweep.get('cases', 0)} cases passed, "
                f"{sweep.get('skipped', 0)} redrawn"
            )
            for failure in sweep.get("failures", []):
                st.error(f"{failure.get('report')}: {failure.get('witness')}")


def display_report() -> None:
    report: Optional[Dict[str, Any]] = st.session_state.get(SESSION_REPORT_KEY)
    if not report:
        return

    render_summary(report)
    tasks: List[Dict[str, Any]] = report.get("tasks", [])
    if not tasks:
        st.info("The report has no tasks.")
        return

    status_filter = st.radio(
        "Show",
        options=["all", PASSED, FAILED],
        horizontal=True,
        key=SESSION_FILTER_KEY,
    )
    shown = [task for task in tasks if status_filter == "all" or task.get("status") == status_filter]
    if not shown:
        st.info(f"No {status_filter} tasks.")
    for task in shown:
        render_task(task)


def render_footer() -> None:
    if not st.session_state.get(FOOTER_STYLE_KEY):
        st.markdown(
            """
            <style>
                footer {
                    visibility: hidden;
                }
                .custom-footer {
                    margin-top: 3rem;
                    padding: 1.5rem 0 2rem;
                    text-align: center;
                    font-size: 0.9rem;
                }
            </style>
            """,
            unsafe_allow_html=True,
        )
        st.session_state[FOOTER_STYLE_KEY] = True

    st.markdown(
        '<div class="custom-footer">Reports are produced by <code>pcalc run</code>.</div>',
        unsafe_allow_html=True,
    )


def main() -> None:
    load_env_file()
    configure_page()
    render_intro()
    render_load_form()
    display_report()
    render_footer()


if __name__ == "__main__":
    main()
