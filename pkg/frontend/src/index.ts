export { CsvError, Table, column, numColumn, parseCsv, requireSchema } from "./csv.js";
export {
  FIGURE_KINDS,
  FigureKind,
  alphaScatter,
  horizontalHist,
  ratioCurve,
  render,
  semicircleDensity,
  semicircleHist,
} from "./figures.js";
export { main } from "./cli.js";
