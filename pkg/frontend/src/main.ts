import { StudioApi } from "./api.js";
import { StudioApp } from "./app.js";

const params = new URLSearchParams(window.location.search);
const baseUrl =
  params.get("api") ?? localStorage.getItem("chainstage.api") ?? "http://127.0.0.1:8800";
localStorage.setItem("chainstage.api", baseUrl);

const app = new StudioApp(new StudioApi(baseUrl));
document.getElementById("root")!.append(app.element);

const designId = params.get("design");
if (designId) {
  app.loadDesign(designId).catch((error) => {
    console.error("could not load design", error);
  });
}
