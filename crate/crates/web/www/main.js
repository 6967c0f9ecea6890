import init, { dynamics, rabi_sweep, spectrum } from "./pkg/chrw_web.js";

const COLORS = { exact: "#000", chrw: "#d33", rabi_rwa: "#27c", rwa_rf: "#3a3", second_order: "#e90" };

const num = (id) => Number(document.getElementById(id).value);
const params = () => [num("delta"), num("epsilon"), num("amplitude"), num("omega")];

function legend(id, names) {
  document.getElementById(id).innerHTML = names
    .map((n) => `<span><i style="background:${COLORS[n]}"></i>${n}</span>`)
    .join("");
}

function status(id, text, isError = false) {
  const el = document.getElementById(id);
  el.textContent = text;
  el.classList.toggle("error", isError);
}

// Line plot of several series sharing one x axis. NaN values break the line.
function plot(canvasId, x, series, { xLabel, yLabel, yMin, yMax, marks = [] }) {
  const canvas = document.getElementById(canvasId);
  const dpr = window.devicePixelRatio || 1;
  const w = canvas.clientWidth, h = canvas.clientHeight;
  canvas.width = w * dpr;
  canvas.height = h * dpr;
  const ctx = canvas.getContext("2d");
  ctx.scale(dpr, dpr);
  ctx.clearRect(0, 0, w, h);

  const pad = { l: 52, r: 12, t: 10, b: 34 };
  const x0 = x[0], x1 = x[x.length - 1];
  if (yMin === undefined || yMax === undefined) {
    let lo = Infinity, hi = -Infinity;
    for (const { y } of series) for (const v of y) if (Number.isFinite(v)) { lo = Math.min(lo, v); hi = Math.max(hi, v); }
    if (!(hi > lo)) { lo -= 0.5; hi += 0.5; }
    yMin ??= lo;
    yMax ??= hi + 0.05 * (hi - lo);
  }
  const px = (v) => pad.l + ((v - x0) / (x1 - x0)) * (w - pad.l - pad.r);
  const py = (v) => h - pad.b - ((v - yMin) / (yMax - yMin)) * (h - pad.t - pad.b);

  ctx.strokeStyle = "#999";
  ctx.fillStyle = "#444";
  ctx.font = "11px system-ui";
  ctx.strokeRect(pad.l, pad.t, w - pad.l - pad.r, h - pad.t - pad.b);
  for (let i = 0; i <= 4; i++) {
    const xv = x0 + ((x1 - x0) * i) / 4, yv = yMin + ((yMax - yMin) * i) / 4;
    ctx.textAlign = "center";
    ctx.fillText(xv.toPrecision(3), px(xv), h - pad.b + 14);
    ctx.textAlign = "right";
    ctx.fillText(yv.toPrecision(3), pad.l - 4, py(yv) + 4);
  }
  ctx.textAlign = "center";
  ctx.fillText(xLabel, pad.l + (w - pad.l - pad.r) / 2, h - 4);
  ctx.save();
  ctx.translate(12, pad.t + (h - pad.t - pad.b) / 2);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(yLabel, 0, 0);
  ctx.restore();

  ctx.save();
  ctx.beginPath();
  ctx.rect(pad.l, pad.t, w - pad.l - pad.r, h - pad.t - pad.b);
  ctx.clip();
  for (const { name, y } of series) {
    ctx.strokeStyle = COLORS[name];
    ctx.lineWidth = name === "exact" ? 1.6 : 1.1;
    ctx.beginPath();
    let pen = false;
    for (let i = 0; i < x.length; i++) {
      if (!Number.isFinite(y[i])) { pen = false; continue; }
      pen ? ctx.lineTo(px(x[i]), py(y[i])) : ctx.moveTo(px(x[i]), py(y[i]));
      pen = true;
    }
    ctx.stroke();
  }
  ctx.fillStyle = "#555";
  for (const { at, text } of marks) {
    ctx.fillText(text, px(at), pad.t + 12);
  }
  ctx.restore();
}

function runDynamics() {
  const names = ["exact", "chrw", "rabi_rwa", "rwa_rf"];
  try {
    const c = dynamics(...params(), num("t_max"), num("samples"));
    plot("plot-dynamics", c.t, names.map((name) => ({ name, y: c[name] })), {
      xLabel: "t", yLabel: "P_up", yMin: 0, yMax: 1.02,
    });
    legend("legend-dynamics", names);
    status("status-dynamics",
      `Ω_R = ${c.rabi_freq.toPrecision(6)}   n = ${c.photon_n}\n` +
      `max |P - P_exact|: chrw ${c.max_dev_chrw.toPrecision(3)}, ` +
      `rabi_rwa ${c.max_dev_rabi_rwa.toPrecision(3)}, rwa_rf ${c.max_dev_rwa_rf.toPrecision(3)}`);
    c.free();
  } catch (e) {
    status("status-dynamics", String(e), true);
  }
}

function runSweep() {
  const names = ["chrw", "second_order", "rabi_rwa"];
  try {
    const [delta, epsilon, , omega] = params();
    const s = rabi_sweep(delta, epsilon, omega, num("a_max"), num("points"));
    plot("plot-sweep", s.amplitude, names.map((name) => ({ name, y: s[name] })), {
      xLabel: "A", yLabel: "Ω_R", yMin: 0,
    });
    legend("legend-sweep", names);
    status("status-sweep", "");
    s.free();
  } catch (e) {
    status("status-sweep", String(e), true);
  }
}

function runSpectrum() {
  const names = ["exact", "chrw"];
  try {
    const v = spectrum(...params(), num("threshold"));
    const omega = num("omega");
    // show the first four harmonics and their sidebands
    const cut = v.frequency.findIndex((f) => f > 4.5 * omega + v.rabi_freq);
    const end = cut < 0 ? v.frequency.length : cut;
    const x = v.frequency.slice(0, end);
    const labels = v.peak_label;
    const freqs = v.peak_frequency;
    const weights = v.peak_weight;
    plot("plot-spectrum", x, names.map((name) => ({ name, y: v[name].slice(0, end) })), {
      xLabel: "ν", yLabel: "|F(ν)|", yMin: 0,
      marks: labels.map((text, i) => ({ at: freqs[i], text })).filter((m) => m.at <= x[x.length - 1]),
    });
    legend("legend-spectrum", names);
    const lines = labels.map((l, i) => `${freqs[i].toFixed(4)}  ${weights[i].toFixed(3)}  ${l}`);
    status("status-spectrum",
      `Ω_R = ${v.rabi_freq.toPrecision(6)}   resolution ${v.resolution.toPrecision(3)}\n` +
      `exact peaks (ν, weight, label):\n${lines.join("\n")}`);
    v.free();
  } catch (e) {
    status("status-spectrum", String(e), true);
  }
}

await init();
document.getElementById("run-dynamics").addEventListener("click", runDynamics);
document.getElementById("run-sweep").addEventListener("click", runSweep);
document.getElementById("run-spectrum").addEventListener("click", runSpectrum);
runDynamics();
runSweep();
