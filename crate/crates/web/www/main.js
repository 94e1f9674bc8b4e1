import init, { relation, sweep_table, score_pair } from "./pkg/sigrank_web.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";

function el(name, attrs, parent) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (parent) parent.appendChild(node);
  return node;
}

let sweepCache = null;

function drawGraph(view, reduce) {
  const svg = $("graph");
  svg.replaceChildren();
  const defs = el("defs", {}, svg);
  const marker = el("marker", { id: "arrow", viewBox: "0 0 10 10", refX: 22, refY: 5,
    markerWidth: 6, markerHeight: 6, orient: "auto-start-reverse" }, defs);
  el("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#555" }, marker);

  const k = view.algorithms.length;
  const r = 200;
  // place nodes by rank level when available, otherwise on a circle
  const pos = [];
  if (view.levels) {
    const n = view.levels.length;
    view.levels.forEach((level, t) => {
      const y = n === 1 ? 0 : -r + (2 * r * t) / (n - 1);
      level.forEach((a, s) => {
        const x = level.length === 1 ? 0 : -r + (2 * r * s) / (level.length - 1);
        pos[a - 1] = [x, y];
      });
    });
  } else {
    for (let i = 0; i < k; i++) {
      const a = (2 * Math.PI * i) / k - Math.PI / 2;
      pos[i] = [r * Math.cos(a), r * Math.sin(a)];
    }
  }
  const cyclic = new Set(view.cyclic_components.flat());
  const arcs = reduce ? view.reduced_arcs : view.arcs;
  for (const [i, j] of arcs) {
    const [x1, y1] = pos[i - 1];
    const [x2, y2] = pos[j - 1];
    const hot = cyclic.has(i) && cyclic.has(j);
    el("line", { x1, y1, x2, y2, stroke: hot ? "#c33" : "#999",
      "stroke-width": hot ? 2 : 1, "marker-end": "url(#arrow)" }, svg);
  }
  const top = new Set(view.maximum_set);
  view.algorithms.forEach((name, i) => {
    const [x, y] = pos[i];
    const g = el("g", {}, svg);
    el("circle", { cx: x, cy: y, r: 14, fill: top.has(i + 1) ? "#ffd966" : "#fff",
      stroke: cyclic.has(i + 1) ? "#c33" : "#333" }, g);
    const label = el("text", { x, y: y + 4, "text-anchor": "middle", "font-size": 11 }, g);
    label.textContent = i + 1;
    el("title", {}, g).textContent = name;
  });
}

function renderRelation() {
  const csv = $("csv").value;
  const sense = $("sense").value;
  const sigma = $("sigma").value;
  $("sigma-label").textContent = sigma;
  $("rel-error").textContent = "";
  let view;
  try {
    view = JSON.parse(relation(csv, sense, sigma));
  } catch (e) {
    $("rel-error").textContent = String(e);
    return;
  }
  const slider = $("sigma");
  slider.max = Number(view.bound) + 0.5;
  slider.dataset.star = view.sigma_star;
  drawGraph(view, $("reduce").checked);
  const names = view.algorithms;
  $("status").innerHTML =
    `${view.arcs.length} arcs, ${view.cycle_free ? "cycle-free" : "<b>cyclic</b>"}; ` +
    `smallest cycle-free σ = ${view.sigma_star}<br>` +
    `maximum set: ${view.maximum_set.map((i) => names[i - 1]).join(", ") || "(empty)"}`;
  const list = $("levels");
  list.replaceChildren();
  if (view.levels) {
    for (const level of view.levels) {
      const li = document.createElement("li");
      li.textContent = level.map((i) => `${names[i - 1]} (${i})`).join(", ");
      list.appendChild(li);
    }
  } else {
    const li = document.createElement("li");
    li.className = "muted";
    li.textContent = "not rankable: cycles among " +
      view.cyclic_components.map((c) => `{${c.join(",")}}`).join(" ");
    list.appendChild(li);
  }
  $("dot").textContent = view.dot;
}

function renderSweep() {
  const svg = $("sweep");
  svg.replaceChildren();
  let report;
  try {
    report = JSON.parse(sweep_table($("csv").value, $("sense").value));
  } catch (e) {
    return;
  }
  sweepCache = report;
  const entries = report.entries;
  const W = 700, H = 200, pad = 24;
  const maxSigma = Number(entries[entries.length - 1].sigma) || 1;
  const maxEdges = Math.max(1, ...entries.map((e) => e.edge_count));
  entries.forEach((e, t) => {
    const next = t + 1 < entries.length ? Number(entries[t + 1].sigma) : maxSigma + 1;
    const x = pad + ((W - 2 * pad) * Number(e.sigma)) / (maxSigma + 1);
    const w = Math.max(1, ((W - 2 * pad) * (next - Number(e.sigma))) / (maxSigma + 1) - 1);
    const h = ((H - 2 * pad) * e.edge_count) / maxEdges;
    const bar = el("rect", { x, y: H - pad - h, width: w, height: Math.max(h, 1),
      fill: e.cycle_free ? "#7a9cc6" : "#d66", cursor: "pointer" }, svg);
    el("title", {}, bar).textContent =
      `σ=${e.sigma}: ${e.edge_count} pairs, max set ${e.maximum_set.length}` +
      (e.levels ? `, ${e.levels.length} levels` : ", cyclic");
    bar.addEventListener("click", () => {
      $("sigma").value = e.sigma;
      renderRelation();
    });
  });
  el("text", { x: pad, y: H - 6, "font-size": 10 }, svg).textContent = "0";
  el("text", { x: W - pad, y: H - 6, "font-size": 10, "text-anchor": "end" }, svg)
    .textContent = `σ ${maxSigma}`;
}

function renderPair() {
  const out = $("pair");
  try {
    const v = JSON.parse(score_pair($("px").value, $("py").value, $("psense").value));
    const rows = v.ratios.map((r, i) => {
      const s = v.signs[i];
      const cls = s > 0 ? "pos" : s < 0 ? "neg" : "";
      return `<tr><td>${i + 1}</td><td>${+r.toPrecision(6)}</td><td class="${cls}">${s}</td>` +
        `<td>${v.awards[i]}</td><td class="${cls}">${s * v.awards[i]}</td></tr>`;
    }).join("");
    out.innerHTML = `<table><tr><th>i</th><th>ratio</th><th>sign</th><th>award</th><th>signed</th></tr>` +
      `${rows}</table><p>D = <b>${v.score}</b> (bound ±${v.bound})</p>`;
  } catch (e) {
    out.innerHTML = `<div class="err">${String(e)}</div>`;
  }
}

await init();
$("sigma").addEventListener("input", renderRelation);
$("reduce").addEventListener("change", renderRelation);
$("star").addEventListener("click", () => {
  $("sigma").value = $("sigma").dataset.star;
  renderRelation();
});
for (const id of ["csv", "sense"]) {
  $(id).addEventListener("change", () => { renderRelation(); renderSweep(); });
}
for (const id of ["px", "py", "psense"]) $(id).addEventListener("input", renderPair);
$("sigma").max = 400;
$("sigma").value = 60;
renderRelation();
renderSweep();
renderPair();
