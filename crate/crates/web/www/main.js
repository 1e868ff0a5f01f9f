import init, { polytope_view, hull_view, valuation_view } from "./pkg/polyptych_web.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  try {
    out.replaceChildren(...f());
  } catch (e) {
    const p = document.createElement("p");
    p.className = "error";
    p.textContent = e.message ?? String(e);
    out.replaceChildren(p);
  }
}

function pre(text) {
  const el = document.createElement("pre");
  el.textContent = text;
  return el;
}

function panels(json) {
  const v = JSON.parse(json);
  return v.panels.flatMap((panel, i) => {
    const h = document.createElement("h3");
    h.textContent = panel.label;
    const row = document.createElement("div");
    row.className = "charts";
    v.svgs[i].forEach((svg, k) => {
      const fig = document.createElement("figure");
      fig.innerHTML = svg;
      const cap = document.createElement("figcaption");
      const c = panel.charts[k];
      cap.textContent = `chart ${c.chart}: ` + c.vertices.map((p) => `(${p[0]}, ${p[1]})`).join(" ");
      fig.append(cap);
      row.append(fig);
    });
    const flags = ["integral", "chart_gorenstein_fano", "lattice_equivalent", "charts_identical"]
      .filter((k) => k in panel)
      .map((k) => `${k}: ${panel[k]}`)
      .join(", ");
    return [h, row, pre(flags)];
  });
}

await init();

$("p-go").onclick = () => show($("p-out"), () => panels(polytope_view(Number($("p-s").value), $("p-pts").value)));
$("h-go").onclick = () => show($("h-out"), () => panels(hull_view(Number($("h-s").value), $("h-els").value)));
$("v-go").onclick = () =>
  show($("v-out"), () => {
    const v = JSON.parse(valuation_view(Number($("v-s").value), $("v-expr").value));
    if (v.infinity) return [pre("infinity")];
    const lines = [`f = ${v.canonical}`, "min of:", ...v.pieces.map((p) => `  (${p.join(", ")})`)];
    if (v.point) lines.push(`single point (${v.point.join(", ")})`);
    return [pre(lines.join("\n"))];
  });

for (const id of ["p-go", "h-go", "v-go"]) $(id).click();
